#pragma once

// Structural invariants of the underlying graph (components, cyclomatic number,
// pendant vertices, bipartiteness, girth, bounded cycle enumeration) and the
// sign-dependent ones (cycle signs, balance).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "sgrank/signed_graph.hpp"

namespace sgrank {

struct InvariantProfile {
  int components = 0;
  int cyclomatic = 0;
  int pendant_count = 0;
  bool bipartite = true;
  std::optional<int> girth;
  bool balanced = true;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

/// A simple cycle as a vertex sequence (the closing edge back to the first
/// vertex is implied).
struct CycleRecord {
  std::vector<Vertex> vertices;
  Sign sign = Sign::Positive;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

/// Component label per vertex, labels 0.. in order of first vertex.
inline std::vector<int> component_labels(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
        if (label[static_cast<std::size_t>(nb.vertex)] < 0) {
          label[static_cast<std::size_t>(nb.vertex)] = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  return label;
}

inline int component_count(const SignedGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

inline bool is_connected(const SignedGraph& g) { return g.order() > 0 && component_count(g) == 1; }

inline int cyclomatic_number(const SignedGraph& g) {
  return static_cast<int>(g.size()) - g.order() + component_count(g);
}

inline int pendant_count(const SignedGraph& g) {
  const auto deg = degrees(g);
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

inline bool is_bipartite(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
        auto& sn = side[static_cast<std::size_t>(nb.vertex)];
        if (sn < 0) {
          sn = 1 - side[static_cast<std::size_t>(x)];
          q.push(nb.vertex);
        } else if (sn == side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Balance via vertex potentials on a BFS spanning forest: balanced iff every
/// edge satisfies sigma(uv) = theta(u) * theta(v).
inline bool is_balanced(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<int> theta(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (theta[static_cast<std::size_t>(s)] != 0) continue;
    theta[static_cast<std::size_t>(s)] = 1;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      const int tx = theta[static_cast<std::size_t>(x)];
      for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
        auto& tn = theta[static_cast<std::size_t>(nb.vertex)];
        if (tn == 0) {
          tn = tx * to_int(nb.sign);
          q.push(nb.vertex);
        } else if (tn != tx * to_int(nb.sign)) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Girth by BFS from every vertex; nullopt for forests.
inline std::optional<int> girth(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  const auto n = static_cast<std::size_t>(g.order());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue(n);
  for (Vertex r = 0; r < g.order(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(r)] = 0;
    parent[static_cast<std::size_t>(r)] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = r;
    while (head < tail) {
      Vertex x = queue[head++];
      const int dx = dist[static_cast<std::size_t>(x)];
      if (2 * dx >= best) break;
      for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
        const auto y = static_cast<std::size_t>(nb.vertex);
        if (dist[y] < 0) {
          dist[y] = dx + 1;
          parent[y] = x;
          queue[tail++] = nb.vertex;
        } else if (parent[static_cast<std::size_t>(x)] != nb.vertex) {
          best = std::min(best, dx + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

inline Sign cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (a < 0 || a >= g.order()) throw std::invalid_argument("cycle vertex out of range");
    if (seen[static_cast<std::size_t>(a)]++) throw std::invalid_argument("cycle repeats a vertex");
    const auto idx = g.edge_index(a, b);
    if (idx < 0) throw std::invalid_argument("cycle uses a non-edge");
    s = s * g.edges()[static_cast<std::size_t>(idx)].sign;
  }
  return s;
}

namespace detail {

// Depth-first extension of a path that starts at its minimum vertex `root`.
// Emits each cycle once: the second vertex must be smaller than the last.
template <class Emit>
void extend_cycles(const AdjacencyList& adj, Vertex root, std::size_t max_len, std::vector<Vertex>& path,
                   std::vector<char>& on_path, Emit&& emit) {
  const Vertex tail = path.back();
  for (const auto& nb : adj[static_cast<std::size_t>(tail)]) {
    const Vertex y = nb.vertex;
    if (y == root) {
      if (path.size() >= 3 && path[1] < tail) emit(path);
      continue;
    }
    if (y < root || on_path[static_cast<std::size_t>(y)] || path.size() >= max_len) continue;
    path.push_back(y);
    on_path[static_cast<std::size_t>(y)] = 1;
    extend_cycles(adj, root, max_len, path, on_path, emit);
    on_path[static_cast<std::size_t>(y)] = 0;
    path.pop_back();
  }
}

}  // namespace detail

/// Every simple cycle of length <= max_len exactly once, starting at its
/// minimum vertex and continuing to the smaller of that vertex's two cycle
/// neighbors. Ordered by root, then lexicographically.
inline std::vector<CycleRecord> cycles_up_to(const SignedGraph& g, std::size_t max_len) {
  const auto adj = adjacency_list(g);
  std::vector<CycleRecord> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  for (Vertex r = 0; r < g.order(); ++r) {
    path.assign(1, r);
    on_path[static_cast<std::size_t>(r)] = 1;
    detail::extend_cycles(adj, r, max_len, path, on_path, [&](const std::vector<Vertex>& p) {
      out.push_back({p, cycle_sign(g, p)});
    });
    on_path[static_cast<std::size_t>(r)] = 0;
  }
  return out;
}

/// A cycle of length girth(g): the lowest root admitting one, then the
/// lexicographically smallest vertex sequence in canonical orientation.
inline std::optional<CycleRecord> shortest_cycle(const SignedGraph& g) {
  const auto gr = girth(g);
  if (!gr) return std::nullopt;
  const auto len = static_cast<std::size_t>(*gr);
  const auto adj = adjacency_list(g);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  std::vector<int> dist(n);
  for (Vertex r = 0; r < g.order(); ++r) {
    // Distances to r within vertices >= r prune paths that cannot close in time.
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(r)] = 0;
    q.push(r);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
        if (nb.vertex > r && dist[static_cast<std::size_t>(nb.vertex)] < 0) {
          dist[static_cast<std::size_t>(nb.vertex)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(nb.vertex);
        }
      }
    }
    std::optional<std::vector<Vertex>> found;
    path.assign(1, r);
    on_path[static_cast<std::size_t>(r)] = 1;
    auto dfs = [&](auto&& self) -> void {
      if (found) return;
      const Vertex tail = path.back();
      for (const auto& nb : adj[static_cast<std::size_t>(tail)]) {
        if (found) return;
        const Vertex y = nb.vertex;
        if (y == r) {
          if (path.size() == len && path[1] < tail) found = path;
          continue;
        }
        if (y < r || on_path[static_cast<std::size_t>(y)] || path.size() >= len) continue;
        const int dy = dist[static_cast<std::size_t>(y)];
        if (dy < 0 || path.size() + static_cast<std::size_t>(dy) > len) continue;
        path.push_back(y);
        on_path[static_cast<std::size_t>(y)] = 1;
        self(self);
        on_path[static_cast<std::size_t>(y)] = 0;
        path.pop_back();
      }
    };
    dfs(dfs);
    on_path[static_cast<std::size_t>(r)] = 0;
    if (found) return CycleRecord{*found, cycle_sign(g, *found)};
  }
  return std::nullopt;  // unreachable when girth exists
}

inline InvariantProfile profile(const SignedGraph& g) {
  InvariantProfile p;
  p.components = component_count(g);
  p.cyclomatic = static_cast<int>(g.size()) - g.order() + p.components;
  p.pendant_count = pendant_count(g);
  p.bipartite = is_bipartite(g);
  p.girth = girth(g);
  p.balanced = is_balanced(g);
  return p;
}

}  // namespace sgrank
