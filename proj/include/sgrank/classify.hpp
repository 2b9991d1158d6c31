#pragma once

// Structural recognition of the extremal signed graphs for rank = girth - 2 and
// rank = girth. Shape detection depends only on the underlying graph and is
// split out (ShapeAnalysis) so callers that sweep many signings of one graph
// can do it once.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sgrank/exact_rank.hpp"
#include "sgrank/invariants.hpp"
#include "sgrank/signed_graph.hpp"

namespace sgrank {

// ---------------------------------------------------------------------------
// Certificates

struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

struct CycleCertificate {
  std::vector<Vertex> cycle;
  Sign sign = Sign::Positive;
};

/// Complete tripartite partition; polarity[v] is +1 when v has the same signed
/// neighborhood as its part's representative, -1 when it is exactly swapped.
struct TripartiteCertificate {
  std::array<std::vector<Vertex>, 3> parts;
  std::array<Vertex, 3> representatives{};
  std::vector<int> polarity;
};

/// gaps[i] counts the non-center cycle vertices strictly between centers[i]
/// and centers[i+1] (cyclically).
struct UnicyclicCertificate {
  std::vector<Vertex> cycle;
  std::vector<Vertex> centers;
  std::vector<int> gaps;
};

struct CycleStarCertificate {
  std::vector<Vertex> cycle;
  Vertex attachment = 0;
  Vertex center = 0;
  std::vector<Vertex> leaves;
  Sign cycle_sign = Sign::Positive;
};

struct ThetaCertificate {
  std::array<Vertex, 2> branches{};
  std::array<std::vector<Vertex>, 3> paths;  // branch-to-branch, sorted by order
  std::array<Sign, 3> path_signs{};
};

struct SubdividedK4Certificate {
  std::array<Vertex, 4> branches{};
  std::array<std::vector<Vertex>, 4> six_cycles;
  std::array<Sign, 4> six_cycle_signs{};
};

/// Girth-4, rank-4 case: the catalog of admissible reduced graphs is not
/// encoded, so acceptance rests on the computed rank.
struct RankDeferredCertificate {
  SignedGraph reduced;
  std::size_t rank = 0;
};

using Certificate = std::variant<std::monostate, Bipartition, CycleCertificate, TripartiteCertificate,
                                 UnicyclicCertificate, CycleStarCertificate, ThetaCertificate, SubdividedK4Certificate,
                                 RankDeferredCertificate>;

// ---------------------------------------------------------------------------
// Verdicts

enum class GirthMinusTwoCase { BalancedCompleteBipartite, BalancedCycle, UnbalancedCycle };

enum class EqualsGirthCase {
  OddCycle,
  CycleWithFullRank,
  RankThreeTripartite,
  CanonicalUnicyclic,
  CycleWithPendantStar,
  GirthFourRankFour,
  Theta,
  SubdividedK4,
};

constexpr char case_letter(GirthMinusTwoCase c) noexcept { return static_cast<char>('A' + static_cast<int>(c)); }
constexpr char case_letter(EqualsGirthCase c) noexcept { return static_cast<char>('a' + static_cast<int>(c)); }

struct GirthMinusTwo {
  GirthMinusTwoCase which;
  Certificate certificate;
};

struct EqualsGirth {
  EqualsGirthCase which;
  Certificate certificate;
  bool figure_deferred = false;
};

struct NonExtremal {
  std::string reason;
};

using Classification = std::variant<GirthMinusTwo, EqualsGirth, NonExtremal>;

// ---------------------------------------------------------------------------
// Underlying-graph shape

struct UnicyclicShape {
  std::vector<Vertex> cycle;               // canonical order
  std::vector<std::vector<Vertex>> leaves;  // per cycle position, when canonical
  bool canonical = false;
  std::optional<CycleStarCertificate> cycle_star;  // cycle_sign left unset
};

struct ThetaShape {
  std::array<Vertex, 2> branches{};
  std::array<std::vector<Vertex>, 3> paths;
};

struct SubdividedK4Shape {
  std::array<Vertex, 4> branches{};
  std::array<std::vector<Vertex>, 4> six_cycles;
};

struct ShapeAnalysis {
  int n = 0;
  std::size_t m = 0;
  bool connected = false;
  int cyclomatic = 0;
  std::optional<int> girth;
  bool bipartite = true;
  std::vector<int> degree;
  std::optional<std::vector<Vertex>> cycle;  // the whole graph is this cycle
  std::optional<Bipartition> complete_bipartite;
  std::optional<std::array<std::vector<Vertex>, 3>> complete_tripartite;
  std::optional<UnicyclicShape> unicyclic;
  std::optional<ThetaShape> theta;
  std::optional<SubdividedK4Shape> subdivided_k4;
};

namespace detail {

inline std::vector<char> dense_adjacency(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> adj(n * n, 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = 1;
  }
  return adj;
}

/// Vertices on cycles of a unicyclic graph, in canonical cyclic order.
inline std::vector<Vertex> unique_cycle(const AdjacencyList& adj, std::vector<int> deg) {
  const auto n = deg.size();
  std::vector<char> removed(n, 0);
  std::vector<Vertex> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] <= 1) stack.push_back(static_cast<Vertex>(v));
  while (!stack.empty()) {
    const auto v = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (const auto& nb : adj[v]) {
      const auto w = static_cast<std::size_t>(nb.vertex);
      if (!removed[w] && --deg[w] == 1) stack.push_back(nb.vertex);
    }
  }
  Vertex start = -1;
  for (std::size_t v = 0; v < n && start < 0; ++v)
    if (!removed[v]) start = static_cast<Vertex>(v);
  std::vector<Vertex> cyc;
  if (start < 0) return cyc;
  Vertex prev = -1;
  Vertex cur = start;
  do {
    cyc.push_back(cur);
    Vertex next = -1;
    for (const auto& nb : adj[static_cast<std::size_t>(cur)]) {
      if (removed[static_cast<std::size_t>(nb.vertex)] || nb.vertex == prev) continue;
      next = nb.vertex;  // neighbors ascend, so the first step goes to the smaller one
      break;
    }
    prev = cur;
    cur = next;
  } while (cur != start && cur >= 0);
  return cyc;
}

inline Sign path_sign(const SignedGraph& g, const std::vector<Vertex>& walk) {
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) s = s * g.sign(walk[i], walk[i + 1]);
  return s;
}

inline Sign closed_sign(const SignedGraph& g, const std::vector<Vertex>& cyc) {
  Sign s = path_sign(g, cyc);
  return s * g.sign(cyc.back(), cyc.front());
}

}  // namespace detail

inline ShapeAnalysis analyze_shape(const SignedGraph& g) {
  ShapeAnalysis s;
  s.n = g.order();
  s.m = g.size();
  s.degree = degrees(g);
  s.connected = is_connected(g);
  s.cyclomatic = cyclomatic_number(g);
  s.girth = girth(g);
  s.bipartite = is_bipartite(g);
  if (!s.connected || !s.girth) return s;

  const auto n = static_cast<std::size_t>(s.n);
  const auto adj = adjacency_list(g);
  const auto deg2 = static_cast<std::size_t>(std::count(s.degree.begin(), s.degree.end(), 2));
  const auto deg3 = static_cast<std::size_t>(std::count(s.degree.begin(), s.degree.end(), 3));

  if (s.cyclomatic == 1) {
    UnicyclicShape u;
    u.cycle = detail::unique_cycle(adj, s.degree);
    if (u.cycle.size() == n) {
      s.cycle = u.cycle;
    } else {
      std::vector<int> pos(n, -1);
      for (std::size_t i = 0; i < u.cycle.size(); ++i) pos[static_cast<std::size_t>(u.cycle[i])] = static_cast<int>(i);
      // canonical: every off-cycle vertex is a leaf hanging on the cycle
      u.canonical = true;
      u.leaves.assign(u.cycle.size(), {});
      for (std::size_t v = 0; v < n && u.canonical; ++v) {
        if (pos[v] >= 0) continue;
        const auto w = adj[v].front().vertex;
        if (s.degree[v] != 1 || pos[static_cast<std::size_t>(w)] < 0) {
          u.canonical = false;
        } else {
          u.leaves[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])].push_back(static_cast<Vertex>(v));
        }
      }
      if (!u.canonical) u.leaves.clear();
      // cycle-star: one off-cycle center on the cycle, every other vertex a leaf of it
      if (!u.canonical) {
        std::vector<Vertex> off;
        for (std::size_t v = 0; v < n; ++v)
          if (pos[v] < 0) off.push_back(static_cast<Vertex>(v));
        std::optional<Vertex> center;
        bool ok = true;
        for (Vertex v : off) {
          for (const auto& nb : adj[static_cast<std::size_t>(v)]) {
            if (pos[static_cast<std::size_t>(nb.vertex)] >= 0) {
              if (center && *center != v) ok = false;
              center = v;
            }
          }
        }
        if (ok && center) {
          CycleStarCertificate cs;
          cs.cycle = u.cycle;
          cs.center = *center;
          for (const auto& nb : adj[static_cast<std::size_t>(*center)]) {
            if (pos[static_cast<std::size_t>(nb.vertex)] >= 0) {
              cs.attachment = nb.vertex;
            } else {
              cs.leaves.push_back(nb.vertex);
            }
          }
          for (Vertex v : off)
            if (v != *center && s.degree[static_cast<std::size_t>(v)] != 1) ok = false;
          if (ok && cs.leaves.size() + 1 == off.size() && !cs.leaves.empty()) u.cycle_star = std::move(cs);
        }
      }
    }
    s.unicyclic = std::move(u);
  }

  if (s.bipartite) {
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<Vertex> order{0};
    for (std::size_t h = 0; h < order.size(); ++h) {
      const auto x = static_cast<std::size_t>(order[h]);
      for (const auto& nb : adj[x]) {
        if (side[static_cast<std::size_t>(nb.vertex)] < 0) {
          side[static_cast<std::size_t>(nb.vertex)] = 1 - side[x];
          order.push_back(nb.vertex);
        }
      }
    }
    Bipartition bp;
    for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? bp.left : bp.right).push_back(static_cast<Vertex>(v));
    if (bp.left.size() * bp.right.size() == s.m) s.complete_bipartite = std::move(bp);
  } else if (*s.girth == 3) {
    const auto dense = detail::dense_adjacency(g);
    std::vector<int> cls(n, -1);
    std::array<std::vector<Vertex>, 3> parts;
    int count = 0;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (cls[v] >= 0) continue;
      if (count == 3) {
        ok = false;
        break;
      }
      for (std::size_t w = v; w < n; ++w) {
        if (w == v || (!dense[v * n + w] && cls[w] < 0)) {
          cls[w] = count;
          parts[static_cast<std::size_t>(count)].push_back(static_cast<Vertex>(w));
        }
      }
      ++count;
    }
    if (ok && count == 3) {
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = a + 1; b < n && ok; ++b)
          if ((dense[a * n + b] != 0) != (cls[a] != cls[b])) ok = false;
      if (ok) s.complete_tripartite = std::move(parts);
    }
  }

  if (s.cyclomatic == 2 && deg3 == 2 && deg2 + 2 == n) {
    ThetaShape t;
    int bi = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (s.degree[v] == 3) t.branches[static_cast<std::size_t>(bi++)] = static_cast<Vertex>(v);
    bool ok = true;
    std::size_t pi = 0;
    for (const auto& first : adj[static_cast<std::size_t>(t.branches[0])]) {
      std::vector<Vertex> path{t.branches[0]};
      Vertex prev = t.branches[0];
      Vertex cur = first.vertex;
      while (s.degree[static_cast<std::size_t>(cur)] == 2) {
        path.push_back(cur);
        const auto& nbs = adj[static_cast<std::size_t>(cur)];
        const Vertex next = nbs[0].vertex == prev ? nbs[1].vertex : nbs[0].vertex;
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      if (cur != t.branches[1]) ok = false;
      t.paths[pi++] = std::move(path);
    }
    if (ok) {
      std::sort(t.paths.begin(), t.paths.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      s.theta = std::move(t);
    }
  }

  if (n == 10 && s.m == 12 && deg3 == 4 && deg2 == 6) {
    SubdividedK4Shape k;
    int bi = 0;
    std::array<int, 10> index{};
    index.fill(-1);
    for (std::size_t v = 0; v < n; ++v)
      if (s.degree[v] == 3) {
        index[v] = bi;
        k.branches[static_cast<std::size_t>(bi++)] = static_cast<Vertex>(v);
      }
    std::array<std::array<Vertex, 4>, 4> mid{};
    for (auto& row : mid) row.fill(-1);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (s.degree[v] != 2) continue;
      const int a = index[static_cast<std::size_t>(adj[v][0].vertex)];
      const int b = index[static_cast<std::size_t>(adj[v][1].vertex)];
      if (a < 0 || b < 0 || mid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= 0) {
        ok = false;
      } else {
        mid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<Vertex>(v);
        mid[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = static_cast<Vertex>(v);
      }
    }
    if (ok) {
      // one 6-cycle per triangle of branch vertices, triangles omitting 3, 2, 1, 0
      const std::array<std::array<std::size_t, 3>, 4> tri{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
      for (std::size_t t = 0; t < 4; ++t) {
        const auto [a, b, c] = tri[t];
        k.six_cycles[t] = {k.branches[a], mid[a][b], k.branches[b], mid[b][c], k.branches[c], mid[c][a]};
      }
      s.subdivided_k4 = std::move(k);
    }
  }
  return s;
}

namespace detail {

inline void require_connected_with_cycle(const ShapeAnalysis& s) {
  if (!s.connected) throw std::invalid_argument("classifier requires a connected signed graph");
  if (!s.girth) throw std::invalid_argument("classifier requires a graph containing a cycle");
}

inline std::optional<TripartiteCertificate> tripartite_clone_check(const ShapeAnalysis& s, const SignedGraph& g) {
  if (!s.complete_tripartite) return std::nullopt;
  TripartiteCertificate cert;
  cert.parts = *s.complete_tripartite;
  cert.polarity.assign(static_cast<std::size_t>(g.order()), 1);
  const auto a = build_adjacency(g);
  const auto n = a.order();
  for (std::size_t p = 0; p < 3; ++p) {
    const auto rep = static_cast<std::size_t>(cert.parts[p].front());
    cert.representatives[p] = cert.parts[p].front();
    for (std::size_t i = 1; i < cert.parts[p].size(); ++i) {
      const auto v = static_cast<std::size_t>(cert.parts[p][i]);
      bool same = true;
      bool swapped = true;
      for (std::size_t z = 0; z < n; ++z) {
        if (a(v, z) != a(rep, z)) same = false;
        if (a(v, z) != -a(rep, z)) swapped = false;
      }
      if (!same && !swapped) return std::nullopt;
      cert.polarity[v] = same ? 1 : -1;
    }
  }
  return cert;
}

inline std::optional<UnicyclicCertificate> extremal_unicyclic_check(const UnicyclicShape& u) {
  if (!u.canonical) return std::nullopt;
  const auto g = u.cycle.size();
  if (g % 2 != 0) return std::nullopt;
  UnicyclicCertificate cert;
  cert.cycle = u.cycle;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g; ++i)
    if (!u.leaves[i].empty()) {
      idx.push_back(i);
      cert.centers.push_back(u.cycle[i]);
    }
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const std::size_t a = idx[j];
    const std::size_t b = idx[(j + 1) % idx.size()];
    const int gap = idx.size() == 1 ? static_cast<int>(g) - 1 : static_cast<int>((b + g - a) % g) - 1;
    cert.gaps.push_back(gap);
  }
  if (idx.size() >= 2) {
    for (int gap : cert.gaps)
      if (gap % 2 == 0) return std::nullopt;
  }
  return cert;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classifiers

inline std::optional<GirthMinusTwo> classify_gminus2(const ShapeAnalysis& s, const SignedGraph& g) {
  detail::require_connected_with_cycle(s);
  if (s.complete_bipartite && s.complete_bipartite->left.size() >= 2 && s.complete_bipartite->right.size() >= 2 &&
      is_balanced(g)) {
    return GirthMinusTwo{GirthMinusTwoCase::BalancedCompleteBipartite, *s.complete_bipartite};
  }
  if (s.cycle) {
    const Sign sg = detail::closed_sign(g, *s.cycle);
    const auto len = s.cycle->size();
    if (sg == Sign::Positive && len % 4 == 0)
      return GirthMinusTwo{GirthMinusTwoCase::BalancedCycle, CycleCertificate{*s.cycle, sg}};
    if (sg == Sign::Negative && len % 4 == 2)
      return GirthMinusTwo{GirthMinusTwoCase::UnbalancedCycle, CycleCertificate{*s.cycle, sg}};
  }
  return std::nullopt;
}

inline std::optional<GirthMinusTwo> classify_gminus2(const SignedGraph& g) {
  return classify_gminus2(analyze_shape(g), g);
}

/// First matching case in the order a..h. `known_rank`, when given, must be
/// the rank of g; it is used only for the girth-4 case.
inline std::optional<EqualsGirth> classify_equals_g(const ShapeAnalysis& s, const SignedGraph& g,
                                                    std::optional<std::size_t> known_rank = std::nullopt) {
  detail::require_connected_with_cycle(s);
  const int gr = *s.girth;

  if (s.cycle) {
    const Sign sg = detail::closed_sign(g, *s.cycle);
    const auto len = s.cycle->size();
    if (len % 2 == 1) return EqualsGirth{EqualsGirthCase::OddCycle, CycleCertificate{*s.cycle, sg}};
    if ((sg == Sign::Positive && len % 4 == 2) || (sg == Sign::Negative && len % 4 == 0))
      return EqualsGirth{EqualsGirthCase::CycleWithFullRank, CycleCertificate{*s.cycle, sg}};
    return std::nullopt;
  }
  if (auto cert = detail::tripartite_clone_check(s, g))
    return EqualsGirth{EqualsGirthCase::RankThreeTripartite, std::move(*cert)};
  if (s.unicyclic) {
    if (auto cert = detail::extremal_unicyclic_check(*s.unicyclic))
      return EqualsGirth{EqualsGirthCase::CanonicalUnicyclic, std::move(*cert)};
    if (s.unicyclic->cycle_star) {
      auto cs = *s.unicyclic->cycle_star;
      cs.cycle_sign = detail::closed_sign(g, cs.cycle);
      const auto len = cs.cycle.size();
      if ((cs.cycle_sign == Sign::Negative && len % 4 == 2) || (cs.cycle_sign == Sign::Positive && len % 4 == 0))
        return EqualsGirth{EqualsGirthCase::CycleWithPendantStar, std::move(cs)};
    }
  }
  if (gr == 4) {
    const std::size_t r = known_rank ? *known_rank : graph_rank(g);
    if (r == 4) {
      const auto reduced = reduce(g);
      return EqualsGirth{EqualsGirthCase::GirthFourRankFour, RankDeferredCertificate{reduced, r}, true};
    }
    return std::nullopt;
  }
  if (s.theta) {
    ThetaCertificate cert{s.theta->branches, s.theta->paths, {}};
    for (std::size_t i = 0; i < 3; ++i) cert.path_signs[i] = detail::path_sign(g, cert.paths[i]);
    const std::array<std::size_t, 3> orders{cert.paths[0].size(), cert.paths[1].size(), cert.paths[2].size()};
    if (orders == std::array<std::size_t, 3>{5, 5, 5}) {
      if (cert.path_signs[0] == cert.path_signs[1] && cert.path_signs[1] == cert.path_signs[2])
        return EqualsGirth{EqualsGirthCase::Theta, std::move(cert)};
    } else if (orders == std::array<std::size_t, 3>{3, 5, 5}) {
      // the two 6-cycles pair the order-3 path with each order-5 path
      if (cert.path_signs[0] * cert.path_signs[1] == Sign::Negative &&
          cert.path_signs[0] * cert.path_signs[2] == Sign::Negative)
        return EqualsGirth{EqualsGirthCase::Theta, std::move(cert)};
    }
  }
  if (s.subdivided_k4) {
    SubdividedK4Certificate cert{s.subdivided_k4->branches, s.subdivided_k4->six_cycles, {}};
    bool all_negative = true;
    for (std::size_t i = 0; i < 4; ++i) {
      cert.six_cycle_signs[i] = detail::closed_sign(g, cert.six_cycles[i]);
      if (cert.six_cycle_signs[i] != Sign::Negative) all_negative = false;
    }
    if (all_negative) return EqualsGirth{EqualsGirthCase::SubdividedK4, std::move(cert)};
  }
  return std::nullopt;
}

inline std::optional<EqualsGirth> classify_equals_g(const SignedGraph& g) {
  return classify_equals_g(analyze_shape(g), g);
}

/// Complete tripartite with every vertex a (possibly negated) clone of its
/// part's first vertex.
inline std::optional<TripartiteCertificate> is_rank3_tripartite(const SignedGraph& g) {
  const auto s = analyze_shape(g);
  if (!s.connected) throw std::invalid_argument("tripartite recognition requires a connected signed graph");
  return detail::tripartite_clone_check(s, g);
}

/// Canonical unicyclic graph (not a bare cycle) with an even cycle and either a
/// single star center or an odd number of cycle vertices between every two
/// consecutive centers. Independent of the signing.
inline std::optional<UnicyclicCertificate> is_extremal_canonical_unicyclic(const SignedGraph& g) {
  const auto s = analyze_shape(g);
  if (!s.connected || s.cyclomatic != 1) throw std::invalid_argument("input is not a connected unicyclic graph");
  if (s.cycle) throw std::invalid_argument("input is a cycle");
  return detail::extremal_unicyclic_check(*s.unicyclic);
}

/// Combined verdict; forests and disconnected graphs are reported as
/// non-extremal with the reason.
inline Classification classify(const SignedGraph& g) {
  const auto s = analyze_shape(g);
  if (!s.connected) return NonExtremal{"not applicable: graph is disconnected"};
  if (!s.girth) return NonExtremal{"not applicable: graph has no cycle"};
  if (auto v = classify_gminus2(s, g)) return std::move(*v);
  if (auto v = classify_equals_g(s, g)) return std::move(*v);
  return NonExtremal{"rank differs from girth - 2 and girth"};
}

}  // namespace sgrank
