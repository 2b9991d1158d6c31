#pragma once

// Deterministic generators for the graph families that appear in the rank/girth
// characterization, with their closed-form ranks where one is known.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sgrank/invariants.hpp"
#include "sgrank/signed_graph.hpp"

namespace sgrank {

/// Path 0-1-...-(n-1). Empty `signs` means all positive.
struct PathSpec {
  int n = 1;
  std::vector<Sign> signs;
};

/// Cycle 0-1-...-(n-1)-0; unbalanced puts the single negative sign on the
/// lexicographically last edge (n-2, n-1).
struct CycleSpec {
  int n = 3;
  bool balanced = true;
};

/// All-positive K_{a,b}: parts 0..a-1 and a..a+b-1.
struct CompleteBipartiteSpec {
  int a = 1;
  int b = 1;
};

/// Complete tripartite graph with sigma(uv) = eps(u) eps(v) tau(part(u), part(v)).
/// Parts are consecutive vertex ranges; tau is ordered (1,2), (1,3), (2,3).
struct TripartiteSpec {
  std::array<int, 3> sizes{1, 1, 1};
  std::vector<Sign> polarity;  // one per vertex; empty means all positive
  std::array<Sign, 3> tau{Sign::Positive, Sign::Positive, Sign::Positive};
};

/// Cycle 0..g-1 with `leaves[pos]` pendant vertices at cycle vertex pos.
struct CanonicalUnicyclicSpec {
  int cycle_length = 3;
  std::map<int, int> leaves;
  std::vector<Sign> signs;  // canonical edge order; empty means all positive
};

/// theta(p,l,q): branch vertices 0 and 1, then the interiors of the three
/// paths in (p, l, q) order, each listed from the 0 side.
struct ThetaSpec {
  int p = 2;
  int l = 3;
  int q = 3;
  std::vector<Sign> signs;
};

/// T1, the full subdivision of K4: hexagon 0..5, vertices 6, 7, 8 hanging off
/// hexagon vertices 0, 2, 4, and apex 9 adjacent to 6, 7, 8.
struct T1Spec {
  std::vector<Sign> signs;
};

/// Cycle 0..g-1, star center g joined to cycle vertex 0, leaves g+1..g+k on the
/// center. Unbalanced negates cycle edge (g-2, g-1).
struct CycleStarSpec {
  int girth = 3;
  int leaves = 1;
  bool balanced = true;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteBipartiteSpec, TripartiteSpec, CanonicalUnicyclicSpec,
                                ThetaSpec, T1Spec, CycleStarSpec>;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

inline SignedGraph apply_optional_signs(const SignedGraph& g, const std::vector<Sign>& signs) {
  if (signs.empty()) return g;
  require(signs.size() == g.size(), "expected " + std::to_string(g.size()) + " signs, got " + std::to_string(signs.size()));
  return g.with_signs(signs);
}

inline void add_cycle(std::vector<SignedEdge>& edges, int len) {
  for (int i = 0; i + 1 < len; ++i) edges.push_back({i, i + 1, Sign::Positive});
  edges.push_back({0, len - 1, Sign::Positive});
}

inline int path_rank(int n) { return n % 2 == 1 ? n - 1 : n; }

inline int cycle_rank(int n, bool balanced) {
  const int r = balanced ? 0 : 2;
  return n % 4 == r ? n - 2 : n;
}

inline Sign sign_along(const SignedGraph& g, const std::vector<Vertex>& walk) {
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) s = s * g.sign(walk[i], walk[i + 1]);
  return s;
}

}  // namespace detail

/// The three branch-to-branch paths of theta(p,l,q) under the generator's labeling.
inline std::array<std::vector<Vertex>, 3> theta_paths(int p, int l, int q) {
  std::array<std::vector<Vertex>, 3> paths;
  Vertex next = 2;
  const std::array<int, 3> orders{p, l, q};
  for (std::size_t i = 0; i < 3; ++i) {
    paths[i].push_back(0);
    for (int k = 0; k < orders[i] - 2; ++k) paths[i].push_back(next++);
    paths[i].push_back(1);
  }
  return paths;
}

/// The four 6-cycles of T1 under the generator's labeling.
inline std::array<std::vector<Vertex>, 4> t1_six_cycles() {
  return {{{0, 1, 2, 3, 4, 5}, {9, 6, 0, 1, 2, 7}, {9, 7, 2, 3, 4, 8}, {9, 8, 4, 5, 0, 6}}};
}

/// A T1 signing whose four 6-cycles are all negative (edges 3-4 and 6-9 negative).
inline std::vector<Sign> t1_all_six_cycles_negative_signs() {
  // canonical order: 0-1 0-5 0-6 1-2 2-3 2-7 3-4 4-5 4-8 6-9 7-9 8-9
  std::vector<Sign> s(12, Sign::Positive);
  s[6] = Sign::Negative;
  s[9] = Sign::Negative;
  return s;
}

inline void validate(const FamilySpec& spec) {
  using detail::require;
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          require(s.n >= 1, "path needs n >= 1");
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          require(s.n >= 3, "cycle needs n >= 3");
        } else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) {
          require(s.a >= 1 && s.b >= 1, "complete bipartite needs both parts nonempty");
        } else if constexpr (std::is_same_v<T, TripartiteSpec>) {
          require(s.sizes[0] >= 1 && s.sizes[1] >= 1 && s.sizes[2] >= 1, "tripartite parts must be nonempty");
          const int n = s.sizes[0] + s.sizes[1] + s.sizes[2];
          require(s.polarity.empty() || static_cast<int>(s.polarity.size()) == n, "polarity needs one sign per vertex");
        } else if constexpr (std::is_same_v<T, CanonicalUnicyclicSpec>) {
          require(s.cycle_length >= 3, "canonical unicyclic needs cycle length >= 3");
          for (auto [pos, cnt] : s.leaves) {
            require(pos >= 0 && pos < s.cycle_length, "star position out of range");
            require(cnt >= 1, "each star needs at least one leaf");
          }
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          require(std::min({s.p, s.l, s.q}) >= 2, "theta needs min{p,l,q} >= 2");
          require((s.p == 2) + (s.l == 2) + (s.q == 2) <= 1, "theta allows at most one path of order 2");
        } else if constexpr (std::is_same_v<T, T1Spec>) {
          require(s.signs.empty() || s.signs.size() == 12, "T1 takes 12 signs");
        } else if constexpr (std::is_same_v<T, CycleStarSpec>) {
          require(s.girth >= 3, "cycle-star needs girth >= 3");
          require(s.leaves >= 1, "cycle-star needs k >= 1");
        }
      },
      spec);
}

inline SignedGraph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> SignedGraph {
        using T = std::decay_t<decltype(s)>;
        std::vector<SignedEdge> edges;
        if constexpr (std::is_same_v<T, PathSpec>) {
          for (int i = 0; i + 1 < s.n; ++i) edges.push_back({i, i + 1, Sign::Positive});
          return detail::apply_optional_signs(SignedGraph(s.n, std::move(edges)), s.signs);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          detail::add_cycle(edges, s.n);
          if (!s.balanced) edges[static_cast<std::size_t>(s.n - 2)].sign = Sign::Negative;  // edge (n-2, n-1)
          return SignedGraph(s.n, std::move(edges));
        } else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) {
          for (int i = 0; i < s.a; ++i)
            for (int j = 0; j < s.b; ++j) edges.push_back({i, s.a + j, Sign::Positive});
          return SignedGraph(s.a + s.b, std::move(edges));
        } else if constexpr (std::is_same_v<T, TripartiteSpec>) {
          const int n = s.sizes[0] + s.sizes[1] + s.sizes[2];
          std::vector<int> part;
          for (int pi = 0; pi < 3; ++pi) part.insert(part.end(), static_cast<std::size_t>(s.sizes[static_cast<std::size_t>(pi)]), pi);
          auto tau = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            return s.tau[static_cast<std::size_t>(a + b - 1)];  // (0,1)->0, (0,2)->1, (1,2)->2
          };
          for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
              const int pu = part[static_cast<std::size_t>(u)];
              const int pv = part[static_cast<std::size_t>(v)];
              if (pu == pv) continue;
              Sign sg = tau(pu, pv);
              if (!s.polarity.empty()) sg = sg * s.polarity[static_cast<std::size_t>(u)] * s.polarity[static_cast<std::size_t>(v)];
              edges.push_back({u, v, sg});
            }
          }
          return SignedGraph(n, std::move(edges));
        } else if constexpr (std::is_same_v<T, CanonicalUnicyclicSpec>) {
          detail::add_cycle(edges, s.cycle_length);
          Vertex next = s.cycle_length;
          for (auto [pos, cnt] : s.leaves)
            for (int i = 0; i < cnt; ++i) edges.push_back({pos, next++, Sign::Positive});
          return detail::apply_optional_signs(SignedGraph(next, std::move(edges)), s.signs);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          const auto paths = theta_paths(s.p, s.l, s.q);
          for (const auto& path : paths)
            for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1], Sign::Positive});
          return detail::apply_optional_signs(SignedGraph(s.p + s.l + s.q - 4, std::move(edges)), s.signs);
        } else if constexpr (std::is_same_v<T, T1Spec>) {
          detail::add_cycle(edges, 6);
          edges.push_back({0, 6, Sign::Positive});
          edges.push_back({2, 7, Sign::Positive});
          edges.push_back({4, 8, Sign::Positive});
          for (Vertex y : {6, 7, 8}) edges.push_back({y, 9, Sign::Positive});
          return detail::apply_optional_signs(SignedGraph(10, std::move(edges)), s.signs);
        } else {
          static_assert(std::is_same_v<T, CycleStarSpec>);
          const int g = s.girth;
          detail::add_cycle(edges, g);
          if (!s.balanced) edges[static_cast<std::size_t>(g - 2)].sign = Sign::Negative;
          edges.push_back({0, g, Sign::Positive});
          for (int i = 1; i <= s.leaves; ++i) edges.push_back({g, g + i, Sign::Positive});
          return SignedGraph(g + s.leaves + 1, std::move(edges));
        }
      },
      spec);
}

/// Closed-form rank where one is known for the parameterization.
inline std::optional<int> expected_rank(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [&spec](const auto& s) -> std::optional<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          return detail::path_rank(s.n);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          return detail::cycle_rank(s.n, s.balanced);
        } else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) {
          return 2;
        } else if constexpr (std::is_same_v<T, TripartiteSpec>) {
          return 3;
        } else if constexpr (std::is_same_v<T, CanonicalUnicyclicSpec>) {
          const int g = s.cycle_length;
          if (s.leaves.empty()) {
            const auto graph = generate(spec);
            std::vector<Vertex> cyc(static_cast<std::size_t>(g));
            for (int i = 0; i < g; ++i) cyc[static_cast<std::size_t>(i)] = i;
            return detail::cycle_rank(g, cycle_sign(graph, cyc) == Sign::Positive);
          }
          // Pendant reduction at every star center leaves paths of the gap orders.
          std::vector<int> centers;
          for (auto [pos, cnt] : s.leaves) centers.push_back(pos);
          const int k = static_cast<int>(centers.size());
          int r = 2 * k;
          for (int i = 0; i < k; ++i) {
            const int a = centers[static_cast<std::size_t>(i)];
            const int b = centers[static_cast<std::size_t>((i + 1) % k)];
            const int gap = k == 1 ? g - 1 : ((b - a + g) % g) - 1;
            r += detail::path_rank(gap);
          }
          return r;
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          if (s.p % 2 == 0 && s.l % 2 == 0 && s.q % 2 == 0) return s.p + s.l + s.q - 4;
          std::array<int, 3> sorted{s.p, s.l, s.q};
          std::sort(sorted.begin(), sorted.end());
          const bool t355 = sorted == std::array<int, 3>{3, 5, 5};
          const bool t555 = sorted == std::array<int, 3>{5, 5, 5};
          if (!t355 && !t555) return std::nullopt;
          const auto graph = generate(spec);
          const auto paths = theta_paths(s.p, s.l, s.q);
          std::array<Sign, 3> ps{};
          for (std::size_t i = 0; i < 3; ++i) ps[i] = detail::sign_along(graph, paths[i]);
          if (t555) {
            const bool balanced = ps[0] == ps[1] && ps[1] == ps[2];
            return balanced ? std::optional<int>(8) : std::nullopt;
          }
          const std::array<int, 3> orders{s.p, s.l, s.q};
          const auto short_idx = static_cast<std::size_t>(std::find(orders.begin(), orders.end(), 3) - orders.begin());
          bool both_negative = true;
          for (std::size_t i = 0; i < 3; ++i)
            if (i != short_idx && ps[i] * ps[short_idx] != Sign::Negative) both_negative = false;
          return both_negative ? std::optional<int>(6) : std::nullopt;
        } else if constexpr (std::is_same_v<T, T1Spec>) {
          const auto graph = generate(spec);
          for (const auto& c : t1_six_cycles())
            if (cycle_sign(graph, c) != Sign::Negative) return std::nullopt;
          return 6;
        } else {
          static_assert(std::is_same_v<T, CycleStarSpec>);
          return 2 + detail::cycle_rank(s.girth, s.balanced);
        }
      },
      spec);
}

}  // namespace sgrank
