#pragma once

// Exhaustive verification of the rank/girth relations: enumerate underlying
// graphs, one signing per switching class, and check every enabled property.
// Work is split into items processed by a thread pool and merged in item
// order, so the report does not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sgrank/classify.hpp"
#include "sgrank/exact_rank.hpp"
#include "sgrank/graph6.hpp"
#include "sgrank/invariants.hpp"
#include "sgrank/signed_graph.hpp"
#include "sgrank/small_graphs.hpp"

namespace sgrank {

enum class Check {
  RankAtLeastGirthMinus2,
  GirthMinusTwoIff,
  NoRankGirthMinus1,
  EqualsGirthIff,
  PendantIdentity,
  NullityBound,
  TwoNeighborGirth,
  RankAtLeastGirthMinus1,  // false in general; harness self-test
};

inline constexpr std::array<Check, 8> kAllChecks{
    Check::RankAtLeastGirthMinus2, Check::GirthMinusTwoIff, Check::NoRankGirthMinus1, Check::EqualsGirthIff,
    Check::PendantIdentity,        Check::NullityBound,     Check::TwoNeighborGirth,  Check::RankAtLeastGirthMinus1};

constexpr std::string_view check_name(Check c) noexcept {
  switch (c) {
    case Check::RankAtLeastGirthMinus2: return "rank_ge_girth_minus_2";
    case Check::GirthMinusTwoIff: return "gminus2_iff";
    case Check::NoRankGirthMinus1: return "no_rank_girth_minus_1";
    case Check::EqualsGirthIff: return "equals_g_iff";
    case Check::PendantIdentity: return "pendant_identity";
    case Check::NullityBound: return "nullity_bound";
    case Check::TwoNeighborGirth: return "two_neighbor_girth";
    case Check::RankAtLeastGirthMinus1: return "rank_ge_girth_minus_1";
  }
  return "";
}

inline Check parse_check(std::string_view name) {
  for (Check c : kAllChecks)
    if (check_name(c) == name) return c;
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

inline std::vector<Check> default_checks() {
  return {Check::RankAtLeastGirthMinus2, Check::GirthMinusTwoIff, Check::NoRankGirthMinus1, Check::EqualsGirthIff,
          Check::PendantIdentity,        Check::NullityBound,     Check::TwoNeighborGirth};
}

struct SweepConfig {
  int max_n_dense = 7;     // labeled enumeration of every edge subset; 0 disables
  int max_n_sparse = 10;   // isomorphism-free, bounded cyclomatic number; 0 disables
  int max_cyclomatic = 3;
  std::vector<std::string> graph6_sources;
  unsigned parallelism = 1;  // 0 = hardware concurrency
  std::vector<Check> checks = default_checks();
  std::size_t max_counterexamples = 50;  // kept per check; counts stay exact
};

enum class Source { Dense, Sparse, Graph6 };

constexpr std::string_view source_name(Source s) noexcept {
  switch (s) {
    case Source::Dense: return "dense";
    case Source::Sparse: return "sparse";
    case Source::Graph6: return "graph6";
  }
  return "";
}

struct Counterexample {
  Check check;
  SignedGraph graph;
  std::string expected;
  std::string observed;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SourceTally {
  std::size_t graphs = 0;
  std::size_t instances = 0;
};

struct SweepReport {
  std::size_t underlying_graphs = 0;
  std::size_t instances_checked = 0;
  std::size_t graph6_skipped = 0;  // disconnected or acyclic records
  std::map<Source, SourceTally> sources;
  std::map<Check, CheckTally> checks;
  std::map<int, std::size_t> rank_minus_girth;
  std::map<std::string, std::size_t> verdicts;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0.0;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.failed == 0; });
  }
  std::size_t total_failures() const {
    std::size_t f = 0;
    for (const auto& [c, t] : checks) f += t.failed;
    return f;
  }
};

// ---------------------------------------------------------------------------
// Enumeration

/// Edge flags for the BFS spanning tree from vertex 0 (ascending neighbor order).
inline std::vector<char> bfs_tree_edges(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<char> tree(g.size(), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  if (g.order() == 0) return tree;
  std::queue<Vertex> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(nb.vertex)]) continue;
      seen[static_cast<std::size_t>(nb.vertex)] = 1;
      tree[static_cast<std::size_t>(g.edge_index(x, nb.vertex))] = 1;
      q.push(nb.vertex);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::invalid_argument("graph is not connected");
  return tree;
}

/// Calls fn(signed) for one representative of every switching class of G:
/// BFS-tree edges positive, all 2^c(G) patterns on the co-tree edges, pattern
/// bit i negating the i-th co-tree edge in canonical edge order.
template <class Fn>
void for_each_signing(const SignedGraph& underlying, Fn&& fn) {
  const auto tree = bfs_tree_edges(underlying);
  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < tree.size(); ++i)
    if (!tree[i]) cotree.push_back(i);
  if (cotree.size() >= 63) throw std::invalid_argument("too many co-tree edges to enumerate");
  std::vector<Sign> signs(underlying.size(), Sign::Positive);
  const std::uint64_t total = std::uint64_t{1} << cotree.size();
  for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
    for (std::size_t i = 0; i < cotree.size(); ++i)
      signs[cotree[i]] = ((pattern >> i) & 1U) ? Sign::Negative : Sign::Positive;
    fn(underlying.with_signs(signs));
  }
}

inline std::vector<SignedGraph> enumerate_signings(const SignedGraph& underlying) {
  std::vector<SignedGraph> out;
  for_each_signing(underlying, [&](SignedGraph g) { out.push_back(std::move(g)); });
  return out;
}

/// The switching of g whose BFS-tree edges are all positive, i.e. the
/// representative of g's class produced by enumerate_signings.
inline SignedGraph switching_representative(const SignedGraph& g) {
  const auto adj = adjacency_list(g);
  std::vector<int> theta(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  theta[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (const auto& nb : adj[static_cast<std::size_t>(x)]) {
      auto& t = theta[static_cast<std::size_t>(nb.vertex)];
      if (t != 0) continue;
      t = theta[static_cast<std::size_t>(x)] * to_int(nb.sign);
      q.push(nb.vertex);
    }
  }
  std::vector<Vertex> flip;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (theta[static_cast<std::size_t>(v)] == 0) throw std::invalid_argument("graph is not connected");
    if (theta[static_cast<std::size_t>(v)] < 0) flip.push_back(v);
  }
  return switching(g, flip);
}

namespace detail {

inline std::vector<std::pair<int, int>> pair_index(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

/// Labeled graph on n vertices from an edge-subset mask, if connected with a cycle.
inline std::optional<SignedGraph> dense_graph(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
  if (std::popcount(mask) < n) return std::nullopt;
  std::array<std::uint32_t, 32> rows{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!((mask >> k) & 1U)) continue;
    rows[static_cast<std::size_t>(pairs[k].first)] |= 1U << pairs[k].second;
    rows[static_cast<std::size_t>(pairs[k].second)] |= 1U << pairs[k].first;
  }
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  if (seen != (1U << n) - 1) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1U) edges.push_back(pairs[k]);
  return SignedGraph::unsigned_graph(n, edges);
}

inline bool has_cycle_connected(const SignedGraph& g) { return is_connected(g) && g.size() >= static_cast<std::size_t>(g.order()); }

}  // namespace detail

/// Streams every underlying graph of the configuration in deterministic order:
/// labeled dense slices n = 3..max_n_dense, then isomorphism-free sparse graphs
/// n = 3..max_n_sparse with 1 <= c(G) <= max_cyclomatic, then graph6 records
/// (connected ones with a cycle).
template <class Fn>
void for_each_underlying(const SweepConfig& cfg, Fn&& fn) {
  for (int n = 3; n <= cfg.max_n_dense; ++n) {
    if (n > 8) throw std::invalid_argument("dense enumeration supports at most 8 vertices");
    const auto pairs = detail::pair_index(n);
    const std::uint32_t total = 1U << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask)
      if (auto g = detail::dense_graph(n, mask, pairs)) fn(*g, Source::Dense);
  }
  if (cfg.max_n_sparse >= 3) {
    const auto levels = connected_graphs_by_order(cfg.max_n_sparse, cfg.max_cyclomatic);
    for (int n = 3; n <= cfg.max_n_sparse; ++n)
      for (const auto& sg : levels[static_cast<std::size_t>(n)])
        if (sg.edge_count() >= n) fn(sg.to_signed(), Source::Sparse);
  }
  for (const auto& path : cfg.graph6_sources)
    for (const auto& g : load_graph6(path))
      if (detail::has_cycle_connected(g)) fn(g, Source::Graph6);
}

inline std::vector<SignedGraph> enumerate_underlying(const SweepConfig& cfg) {
  std::vector<SignedGraph> out;
  for_each_underlying(cfg, [&](const SignedGraph& g, Source) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Checking

namespace detail {

class Checker {
 public:
  Checker(const SweepConfig& cfg, SweepReport& report) : cfg_(cfg), report_(report) {
    for (Check c : cfg.checks) enabled_[static_cast<std::size_t>(c)] = true;
    for (Check c : cfg.checks) report_.checks[c];
  }

  void underlying(const SignedGraph& G, Source src) {
    const auto shape = analyze_shape(G);
    ++report_.underlying_graphs;
    auto& tally = report_.sources[src];
    ++tally.graphs;

    const int gr = *shape.girth;
    if (on(Check::TwoNeighborGirth)) {
      const auto cyc = shortest_cycle(G);
      std::vector<int> hits(static_cast<std::size_t>(G.order()), 0);
      std::vector<char> on_cycle(static_cast<std::size_t>(G.order()), 0);
      for (Vertex v : cyc->vertices) on_cycle[static_cast<std::size_t>(v)] = 1;
      for (const auto& e : G.edges()) {
        if (on_cycle[static_cast<std::size_t>(e.u)] && !on_cycle[static_cast<std::size_t>(e.v)]) ++hits[static_cast<std::size_t>(e.v)];
        if (on_cycle[static_cast<std::size_t>(e.v)] && !on_cycle[static_cast<std::size_t>(e.u)]) ++hits[static_cast<std::size_t>(e.u)];
      }
      const bool premise = std::any_of(hits.begin(), hits.end(), [](int h) { return h >= 2; });
      record(Check::TwoNeighborGirth, !premise || gr == 3 || gr == 4, G, "girth in {3,4}",
             "girth " + std::to_string(gr));
    }

    // first pendant vertex and its neighbor, for the pendant identity
    std::optional<std::array<Vertex, 2>> pendant;
    for (Vertex v = 0; v < G.order() && !pendant; ++v) {
      if (shape.degree[static_cast<std::size_t>(v)] != 1) continue;
      for (const auto& e : G.edges()) {
        if (e.u == v) pendant = std::array<Vertex, 2>{v, e.v};
        if (e.v == v) pendant = std::array<Vertex, 2>{v, e.u};
      }
    }
    const int p = static_cast<int>(std::count(shape.degree.begin(), shape.degree.end(), 1));

    for_each_signing(G, [&](const SignedGraph& g) {
      ++report_.instances_checked;
      ++tally.instances;
      signed_instance(shape, g, gr, p, pendant);
    });
  }

 private:
  bool on(Check c) const { return enabled_[static_cast<std::size_t>(c)]; }

  void record(Check c, bool ok, const SignedGraph& g, std::string expected, std::string observed) {
    auto& t = report_.checks[c];
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (t.failed <= cfg_.max_counterexamples)
      report_.counterexamples.push_back({c, g, std::move(expected), std::move(observed)});
  }

  void signed_instance(const ShapeAnalysis& shape, const SignedGraph& g, int gr, int pendants,
                       const std::optional<std::array<Vertex, 2>>& pendant) {
    const auto r = static_cast<int>(graph_rank(g));
    ++report_.rank_minus_girth[r - gr];
    const auto rank_str = [&] { return "rank " + std::to_string(r) + ", girth " + std::to_string(gr); };

    if (on(Check::RankAtLeastGirthMinus2))
      record(Check::RankAtLeastGirthMinus2, r >= gr - 2, g, "rank >= girth - 2", rank_str());
    if (on(Check::NoRankGirthMinus1)) record(Check::NoRankGirthMinus1, r != gr - 1, g, "rank != girth - 1", rank_str());
    if (on(Check::RankAtLeastGirthMinus1))
      record(Check::RankAtLeastGirthMinus1, r >= gr - 1, g, "rank >= girth - 1", rank_str());

    std::string verdict = "none";
    if (on(Check::GirthMinusTwoIff)) {
      const auto v = classify_gminus2(shape, g);
      if (v) verdict = std::string("gminus2:") + case_letter(v->which);
      const bool ok = v.has_value() == (r == gr - 2);
      record(Check::GirthMinusTwoIff, ok, g, "classifier accepts iff rank = girth - 2",
             rank_str() + ", classifier " + (v ? std::string(1, case_letter(v->which)) : std::string("none")));
    }
    if (on(Check::EqualsGirthIff)) {
      const auto v = classify_equals_g(shape, g, static_cast<std::size_t>(r));
      if (v) verdict = std::string("equals_g:") + case_letter(v->which);
      bool ok = v.has_value() == (r == gr);
      std::string observed = rank_str() + ", classifier " + (v ? std::string(1, case_letter(v->which)) : std::string("none"));
      if (v && v->which == EqualsGirthCase::GirthFourRankFour) {
        // no catalog available: check the consequences instead
        const auto& cert = std::get<RankDeferredCertificate>(v->certificate);
        const auto reduced_rank = graph_rank(cert.reduced);
        ok = ok && shape.bipartite && reduced_rank == 4;
        observed += ", bipartite " + std::string(shape.bipartite ? "yes" : "no") + ", reduced rank " +
                    std::to_string(reduced_rank);
      }
      record(Check::EqualsGirthIff, ok, g, "classifier accepts iff rank = girth", observed);
    }
    ++report_.verdicts[verdict];

    if (on(Check::NullityBound) && !shape.cycle) {
      const int nullity = g.order() - r;
      const int bound = pendants + 2 * shape.cyclomatic - 1;
      record(Check::NullityBound, nullity <= bound, g, "nullity <= " + std::to_string(bound),
             "nullity " + std::to_string(nullity));
    }
    if (on(Check::PendantIdentity) && pendant) {
      const auto rest = delete_vertices(g, *pendant);
      const auto rr = static_cast<int>(graph_rank(rest));
      record(Check::PendantIdentity, r == rr + 2, g, "rank = rank(G - u - v) + 2 = " + std::to_string(rr + 2),
             "rank " + std::to_string(r));
    }
  }

  const SweepConfig& cfg_;
  SweepReport& report_;
  std::array<bool, kAllChecks.size()> enabled_{};
};

inline void merge_into(SweepReport& dst, SweepReport&& src, std::size_t max_cex) {
  dst.underlying_graphs += src.underlying_graphs;
  dst.instances_checked += src.instances_checked;
  dst.graph6_skipped += src.graph6_skipped;
  for (const auto& [s, t] : src.sources) {
    dst.sources[s].graphs += t.graphs;
    dst.sources[s].instances += t.instances;
  }
  std::map<Check, std::size_t> kept;
  for (const auto& c : dst.counterexamples) ++kept[c.check];
  for (auto& c : src.counterexamples)
    if (kept[c.check]++ < max_cex) dst.counterexamples.push_back(std::move(c));
  for (const auto& [c, t] : src.checks) {
    dst.checks[c].passed += t.passed;
    dst.checks[c].failed += t.failed;
  }
  for (const auto& [k, v] : src.rank_minus_girth) dst.rank_minus_girth[k] += v;
  for (const auto& [k, v] : src.verdicts) dst.verdicts[k] += v;
}

}  // namespace detail

inline SweepReport run(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  // Work items: dense mask ranges, then slices of materialized lists.
  struct Item {
    Source source;
    int n = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
  };
  std::vector<Item> items;
  constexpr std::uint32_t kChunk = 1U << 12;
  for (int n = 3; n <= cfg.max_n_dense; ++n) {
    if (n > 8) throw std::invalid_argument("dense enumeration supports at most 8 vertices");
    const std::uint32_t total = 1U << (n * (n - 1) / 2);
    for (std::uint32_t b = 0; b < total; b += kChunk) items.push_back({Source::Dense, n, b, std::min(total, b + kChunk)});
  }
  std::vector<SignedGraph> listed;
  std::vector<Source> listed_source;
  std::size_t graph6_skipped = 0;
  if (cfg.max_n_sparse >= 3) {
    const auto levels = connected_graphs_by_order(cfg.max_n_sparse, cfg.max_cyclomatic);
    for (int n = 3; n <= cfg.max_n_sparse; ++n)
      for (const auto& sg : levels[static_cast<std::size_t>(n)])
        if (sg.edge_count() >= n) {
          listed.push_back(sg.to_signed());
          listed_source.push_back(Source::Sparse);
        }
  }
  for (const auto& path : cfg.graph6_sources) {
    for (auto& g : load_graph6(path)) {
      if (!detail::has_cycle_connected(g)) {
        ++graph6_skipped;
        continue;
      }
      listed.push_back(std::move(g));
      listed_source.push_back(Source::Graph6);
    }
  }
  constexpr std::uint32_t kListChunk = 256;
  for (std::uint32_t b = 0; b < listed.size(); b += kListChunk)
    items.push_back({Source::Sparse, 0, b, std::min<std::uint32_t>(static_cast<std::uint32_t>(listed.size()), b + kListChunk)});

  std::vector<SweepReport> partial(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& it = items[i];
      detail::Checker checker(cfg, partial[i]);
      if (it.n > 0) {
        const auto pairs = detail::pair_index(it.n);
        for (std::uint32_t mask = it.begin; mask < it.end; ++mask)
          if (auto g = detail::dense_graph(it.n, mask, pairs)) checker.underlying(*g, Source::Dense);
      } else {
        for (std::uint32_t k = it.begin; k < it.end; ++k) checker.underlying(listed[k], listed_source[k]);
      }
    }
  };
  unsigned jobs = cfg.parallelism == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.parallelism;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(items.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepReport report;
  detail::Checker init(cfg, report);  // registers every enabled check with zero counts
  for (auto& p : partial) detail::merge_into(report, std::move(p), cfg.max_counterexamples);
  report.graph6_skipped = graph6_skipped;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sgrank
