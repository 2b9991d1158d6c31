#pragma once

// Isomorphism-free generation of small connected graphs of bounded cyclomatic
// number, using an exact canonical labeling (colour refinement plus
// individualization over every branch, pruned only by twin transpositions).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sgrank/signed_graph.hpp"

namespace sgrank {

inline constexpr int kMaxSmallOrder = 11;  // n(n-1)/2 bits must fit in 64

/// Unsigned graph on at most kMaxSmallOrder vertices as adjacency bit rows.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> rows{};

  bool adjacent(int u, int v) const noexcept { return (rows[static_cast<std::size_t>(u)] >> v) & 1U; }
  void add_edge(int u, int v) noexcept {
    rows[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1U << v);
    rows[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1U << u);
  }
  int edge_count() const noexcept {
    int m = 0;
    for (int i = 0; i < n; ++i) m += std::popcount(rows[static_cast<std::size_t>(i)]);
    return m / 2;
  }
  SignedGraph to_signed() const {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adjacent(i, j)) e.emplace_back(i, j);
    return SignedGraph::unsigned_graph(n, e);
  }
};

namespace detail {

using Colors = std::array<int, 16>;

// Equitable refinement; cells keep their relative order so the result is
// isomorphism-invariant.
inline int refine(const SmallGraph& g, Colors& c) {
  const int n = g.n;
  // compress to 0..k-1 keeping order
  std::array<int, 64> rank_of{};
  rank_of.fill(-1);
  for (int v = 0; v < n; ++v) rank_of[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = 0;
  int k = 0;
  for (auto& r : rank_of)
    if (r == 0) r = k++;
  for (int v = 0; v < n; ++v) c[static_cast<std::size_t>(v)] = rank_of[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
  for (;;) {
    std::array<std::array<std::uint8_t, 17>, 16> sig{};
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s[0] = static_cast<std::uint8_t>(c[static_cast<std::size_t>(v)]);
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) ++s[static_cast<std::size_t>(1 + c[static_cast<std::size_t>(w)])];
    }
    std::array<int, 16> order{};
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    Colors next{};
    int cls = 0;
    for (int i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
      if (i > 0 && sig[v] != sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])]) ++cls;
      next[v] = cls;
    }
    const int nk = n == 0 ? 0 : cls + 1;
    c = next;
    if (nk == k) return k;
    k = nk;
  }
}

inline bool twins(const SmallGraph& g, int u, int v) {
  const auto mask = static_cast<std::uint16_t>(~((1U << u) | (1U << v)));
  return (g.rows[static_cast<std::size_t>(u)] & mask) == (g.rows[static_cast<std::size_t>(v)] & mask);
}

inline std::uint64_t leaf_code(const SmallGraph& g, const Colors& c) {
  std::array<int, 16> inv{};
  for (int v = 0; v < g.n; ++v) inv[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      code = (code << 1) | (g.adjacent(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]) ? 1U : 0U);
  return code;
}

inline void canonical_search(const SmallGraph& g, Colors c, std::uint64_t& best) {
  const int k = refine(g, c);
  if (k == g.n) {
    best = std::min(best, leaf_code(g, c));
    return;
  }
  std::array<int, 16> size{};
  for (int v = 0; v < g.n; ++v) ++size[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
  int target = 0;
  while (size[static_cast<std::size_t>(target)] < 2) ++target;
  std::vector<int> branched;
  for (int v = 0; v < g.n; ++v) {
    if (c[static_cast<std::size_t>(v)] != target) continue;
    if (std::any_of(branched.begin(), branched.end(), [&](int u) { return twins(g, u, v); })) continue;
    branched.push_back(v);
    Colors ind{};
    for (int w = 0; w < g.n; ++w) {
      const int cw = c[static_cast<std::size_t>(w)];
      ind[static_cast<std::size_t>(w)] = 2 * cw + ((cw == target && w != v) ? 1 : 0);
    }
    canonical_search(g, ind, best);
  }
}

}  // namespace detail

/// Canonical code: the smallest upper-triangle adjacency string (row-major,
/// most significant bit first) over the individualization-refinement leaves.
/// Equal codes for equal orders iff the graphs are isomorphic.
inline std::uint64_t canonical_code(const SmallGraph& g) {
  if (g.n > kMaxSmallOrder) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  detail::Colors c{};
  std::uint64_t best = ~std::uint64_t{0};
  detail::canonical_search(g, c, best);
  return best;
}

inline SmallGraph decode_canonical(int n, std::uint64_t code) {
  SmallGraph g;
  g.n = n;
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> --bit) & 1U) g.add_edge(i, j);
  return g;
}

/// One representative per isomorphism class of connected graphs on exactly
/// 1..max_n vertices with cyclomatic number <= max_cyclomatic, grouped by
/// order and sorted by canonical code. Every connected graph has a non-cut
/// vertex whose removal keeps it connected and does not raise the cyclomatic
/// number, so growing vertex by vertex reaches every class.
inline std::vector<std::vector<SmallGraph>> connected_graphs_by_order(int max_n, int max_cyclomatic) {
  if (max_n > kMaxSmallOrder) throw std::invalid_argument("sparse enumeration supports at most 11 vertices");
  std::vector<std::vector<SmallGraph>> levels(static_cast<std::size_t>(std::max(max_n, 0) + 1));
  if (max_n < 1) return levels;
  SmallGraph k1;
  k1.n = 1;
  levels[1].push_back(k1);
  for (int n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& parent : levels[static_cast<std::size_t>(n - 1)]) {
      const int c = parent.edge_count() - (n - 1) + 1;
      const int max_deg = max_cyclomatic - c + 1;
      const int p = n - 1;
      for (std::uint32_t s = 1; s < (1U << p); ++s) {
        if (std::popcount(s) > max_deg) continue;
        SmallGraph child = parent;
        child.n = n;
        for (int v = 0; v < p; ++v)
          if ((s >> v) & 1U) child.add_edge(v, p);
        seen.insert(canonical_code(child));
      }
    }
    std::vector<std::uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    auto& level = levels[static_cast<std::size_t>(n)];
    level.reserve(codes.size());
    for (auto code : codes) level.push_back(decode_canonical(n, code));
  }
  return levels;
}

}  // namespace sgrank
