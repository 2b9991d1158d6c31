#pragma once

// Signed simple graphs: the immutable data model plus the operations that only
// depend on the edge list (adjacency matrix, switching, multiples, reduction).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgrank {

using Vertex = int;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Positive : Sign::Negative; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple signed graph on vertices 0..n-1. Edges are stored with u < v, sorted
/// lexicographically by (u, v); loops and repeated pairs are rejected.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) {
        throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") out of range for n=" + std::to_string(n_));
      }
    }
    std::sort(edges_.begin(), edges_.end(), [](const SignedEdge& a, const SignedEdge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                    std::to_string(edges_[i].v) + ")");
      }
    }
  }

  /// All-positive graph from an unsigned edge list.
  static SignedGraph unsigned_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<SignedEdge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, Sign::Positive});
    return SignedGraph(n, std::move(edges));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const SignedEdge> edges() const noexcept { return edges_; }

  /// Index of edge {u,v} in the canonical edge order, or -1.
  std::ptrdiff_t edge_index(Vertex u, Vertex v) const noexcept {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                               [](const SignedEdge& e, const std::pair<Vertex, Vertex>& key) {
                                 return e.u != key.first ? e.u < key.first : e.v < key.second;
                               });
    if (it == edges_.end() || it->u != u || it->v != v) return -1;
    return it - edges_.begin();
  }

  bool has_edge(Vertex u, Vertex v) const noexcept { return edge_index(u, v) >= 0; }

  /// Sign of edge {u,v}; throws if absent.
  Sign sign(Vertex u, Vertex v) const {
    auto idx = edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return edges_[static_cast<std::size_t>(idx)].sign;
  }

  /// Same underlying graph with signs[i] applied to edges()[i].
  SignedGraph with_signs(std::span<const Sign> signs) const {
    if (signs.size() != edges_.size()) throw std::invalid_argument("sign vector length mismatch");
    SignedGraph g = *this;
    for (std::size_t i = 0; i < signs.size(); ++i) g.edges_[i].sign = signs[i];
    return g;
  }

  SignedGraph underlying() const {
    SignedGraph g = *this;
    for (auto& e : g.edges_) e.sign = Sign::Positive;
    return g;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
};

using AdjacencyList = std::vector<std::vector<Neighbor>>;

/// Neighbor lists in ascending vertex order.
inline AdjacencyList adjacency_list(const SignedGraph& g) {
  AdjacencyList adj(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign});
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return adj;
}

inline std::vector<int> degrees(const SignedGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {}
  IntMatrix(std::size_t order, std::vector<std::int64_t> entries) : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_) throw std::invalid_argument("matrix entry count mismatch");
  }

  std::size_t order() const noexcept { return order_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * order_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * order_ + j]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_symmetric() const noexcept {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Symmetric, zero diagonal, entries in {-1,0,1}.
  bool is_signed_adjacency() const noexcept {
    if (!is_symmetric()) return false;
    for (std::size_t i = 0; i < order_; ++i) {
      if ((*this)(i, i) != 0) return false;
      for (std::size_t j = 0; j < order_; ++j)
        if ((*this)(i, j) < -1 || (*this)(i, j) > 1) return false;
    }
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::int64_t> entries_;
};

inline IntMatrix build_adjacency(const SignedGraph& g) {
  IntMatrix a(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges()) {
    a(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = to_int(e.sign);
    a(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = to_int(e.sign);
  }
  return a;
}

/// Switching at U: negates every edge with exactly one endpoint in U.
inline SignedGraph switching(const SignedGraph& g, std::span<const Vertex> subset) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : subset) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("switching vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Sign> signs;
  signs.reserve(g.size());
  for (const auto& e : g.edges()) {
    bool cut = in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
    signs.push_back(cut ? -e.sign : e.sign);
  }
  return g.with_signs(signs);
}

struct NeighborSigns {
  std::vector<Vertex> positive;
  std::vector<Vertex> negative;
};

inline NeighborSigns neighbor_signs(const SignedGraph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  NeighborSigns out;
  for (const auto& e : g.edges()) {
    Vertex other = e.u == v ? e.v : (e.v == v ? e.u : -1);
    if (other < 0) continue;
    (e.sign == Sign::Positive ? out.positive : out.negative).push_back(other);
  }
  std::sort(out.positive.begin(), out.positive.end());
  std::sort(out.negative.begin(), out.negative.end());
  return out;
}

/// x and y (x < y) share a neighborhood and sigma(xz) = k * sigma(yz) for every
/// common neighbor z. Isolated pairs count, with k = +1.
struct MultiplePair {
  Vertex x;
  Vertex y;
  Sign k;

  friend bool operator==(const MultiplePair&, const MultiplePair&) = default;
};

inline std::vector<MultiplePair> find_multiples(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<MultiplePair> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto& nx = adj[static_cast<std::size_t>(x)];
    for (Vertex y = x + 1; y < g.order(); ++y) {
      const auto& ny = adj[static_cast<std::size_t>(y)];
      if (nx.size() != ny.size()) continue;
      bool same = true;
      Sign k = Sign::Positive;
      for (std::size_t i = 0; i < nx.size() && same; ++i) {
        if (nx[i].vertex != ny[i].vertex) {
          same = false;
        } else if (i == 0) {
          k = nx[i].sign * ny[i].sign;
        } else if ((nx[i].sign * ny[i].sign) != k) {
          same = false;
        }
      }
      if (same) out.push_back({x, y, k});
    }
  }
  return out;
}

/// Subgraph induced by the vertices not in `removed`, re-indexed densely in
/// increasing order of the surviving vertices.
inline SignedGraph delete_vertices(const SignedGraph& g, std::span<const Vertex> removed) {
  std::vector<int> remap(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    remap[static_cast<std::size_t>(v)] = -1;
  }
  int next = 0;
  for (auto& r : remap) r = r < 0 ? -1 : next++;
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges()) {
    int a = remap[static_cast<std::size_t>(e.u)];
    int b = remap[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.sign});
  }
  return SignedGraph(next, std::move(edges));
}

/// Subgraph induced by `kept`, re-indexed in increasing vertex order.
inline SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> kept) {
  std::vector<char> keep(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : kept) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    keep[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!keep[static_cast<std::size_t>(v)]) removed.push_back(v);
  return delete_vertices(g, removed);
}

/// Deletes multiples until none remain: each round removes the higher vertex of
/// the lexicographically first multiple pair.
inline SignedGraph reduce(const SignedGraph& g) {
  SignedGraph cur = g;
  for (;;) {
    auto pairs = find_multiples(cur);
    if (pairs.empty()) return cur;
    const Vertex drop[] = {pairs.front().y};
    cur = delete_vertices(cur, drop);
  }
}

/// Compact one-line rendering, e.g. "4:0-1+,1-2-".
inline std::string to_compact_string(const SignedGraph& g) {
  std::ostringstream os;
  os << g.order() << ':';
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.u << '-' << e.v << sign_char(e.sign);
  }
  return os.str();
}

}  // namespace sgrank
