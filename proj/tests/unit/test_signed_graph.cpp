#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "../test_support.hpp"
#include "sgrank/exact_rank.hpp"
#include "sgrank/invariants.hpp"
#include "sgrank/signed_graph.hpp"

using namespace sgrank;
using sgtest::all_positive;

namespace {

SignedGraph c4() { return all_positive(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

SignedGraph k_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return SignedGraph::unsigned_graph(a + b, e);
}

}  // namespace

TEST(SignedGraph, NormalizesAndSortsEdges) {
  SignedGraph g(4, {{3, 1, Sign::Negative}, {0, 2, Sign::Positive}, {1, 0, Sign::Positive}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0].u, 0);
  EXPECT_EQ(g.edges()[0].v, 1);
  EXPECT_EQ(g.edges()[1].v, 2);
  EXPECT_EQ(g.edges()[2].u, 1);
  EXPECT_EQ(g.edges()[2].v, 3);
  EXPECT_EQ(g.sign(3, 1), Sign::Negative);
  EXPECT_EQ(g.sign(1, 3), Sign::Negative);
}

TEST(SignedGraph, RejectsLoopsDuplicatesAndBadEndpoints) {
  EXPECT_THROW(SignedGraph(3, {{1, 1, Sign::Positive}}), std::invalid_argument);
  EXPECT_THROW(SignedGraph(3, {{0, 1, Sign::Positive}, {1, 0, Sign::Negative}}), std::invalid_argument);
  EXPECT_THROW(SignedGraph(3, {{0, 3, Sign::Positive}}), std::out_of_range);
  EXPECT_THROW(SignedGraph(3, {{-1, 2, Sign::Positive}}), std::out_of_range);
}

TEST(SignedGraph, EdgeQueries) {
  const auto g = c4();
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.edge_index(0, 2), -1);
  EXPECT_THROW((void)g.sign(0, 2), std::invalid_argument);
}

TEST(SignedGraph, WithSignsUsesCanonicalOrder) {
  const std::vector<Sign> s{Sign::Positive, Sign::Negative, Sign::Positive, Sign::Negative};
  const auto g = c4().with_signs(s);
  // canonical order: 0-1, 0-3, 1-2, 2-3
  EXPECT_EQ(g.sign(0, 3), Sign::Negative);
  EXPECT_EQ(g.sign(2, 3), Sign::Negative);
  EXPECT_EQ(g.underlying(), c4());
  EXPECT_THROW((void)c4().with_signs(std::vector<Sign>(3, Sign::Positive)), std::invalid_argument);
}

TEST(BuildAdjacency, SingleEdge) {
  const auto m = build_adjacency(all_positive(2, {{0, 1}}));
  EXPECT_EQ(m.order(), 2u);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(m(0, 1), 1);
  EXPECT_EQ(m(1, 0), 1);
  EXPECT_EQ(m(1, 1), 0);
}

TEST(BuildAdjacency, EdgelessIsZero) {
  const auto m = build_adjacency(SignedGraph(3));
  EXPECT_TRUE(std::all_of(m.entries().begin(), m.entries().end(), [](auto x) { return x == 0; }));
}

TEST(BuildAdjacency, NegativeEdgeMirrored) {
  const auto g = SignedGraph(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {2, 3, Sign::Negative}, {0, 3, Sign::Positive}});
  const auto m = build_adjacency(g);
  EXPECT_TRUE(m.is_symmetric());
  EXPECT_TRUE(m.is_signed_adjacency());
  EXPECT_EQ(std::count(m.entries().begin(), m.entries().end(), -1), 2);
  EXPECT_EQ(m(2, 3), -1);
  EXPECT_EQ(m(3, 2), -1);
}

TEST(Switching, EmptyAndFullSetsAreIdentity) {
  const auto g = c4();
  EXPECT_EQ(switching(g, std::vector<Vertex>{}), g);
  EXPECT_EQ(switching(g, std::vector<Vertex>{0, 1, 2, 3}), g);
}

TEST(Switching, SingleVertexFlipsIncidentEdges) {
  const auto s = switching(c4(), std::vector<Vertex>{0});
  EXPECT_EQ(s.sign(0, 1), Sign::Negative);
  EXPECT_EQ(s.sign(0, 3), Sign::Negative);
  EXPECT_EQ(s.sign(1, 2), Sign::Positive);
  const std::vector<Vertex> cyc{0, 1, 2, 3};
  EXPECT_EQ(cycle_sign(s, cyc), Sign::Positive);
  EXPECT_THROW((void)switching(c4(), std::vector<Vertex>{4}), std::out_of_range);
}

TEST(Switching, PreservesRankGirthAndUnderlying) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto g = sgtest::random_graph(rng, n, 0.4);
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) u.push_back(v);
    const auto s = switching(g, u);
    EXPECT_EQ(rank(s).rank, rank(g).rank);
    EXPECT_EQ(girth(s), girth(g));
    EXPECT_EQ(s.underlying(), g.underlying());
    EXPECT_EQ(is_balanced(s), is_balanced(g));
  }
}

TEST(NeighborSigns, Examples) {
  const auto star = all_positive(4, {{0, 1}, {0, 2}, {0, 3}});
  auto ns = neighbor_signs(star, 0);
  EXPECT_EQ(ns.positive, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(ns.negative.empty());

  ns = neighbor_signs(SignedGraph(2), 1);
  EXPECT_TRUE(ns.positive.empty() && ns.negative.empty());

  const SignedGraph tri(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}, {0, 2, Sign::Positive}});
  ns = neighbor_signs(tri, 0);
  EXPECT_EQ(ns.positive, (std::vector<Vertex>{2}));
  EXPECT_EQ(ns.negative, (std::vector<Vertex>{1}));
}

TEST(Multiples, CompleteBipartite) {
  const auto pairs = find_multiples(k_bipartite(2, 3));
  ASSERT_EQ(pairs.size(), 4u);
  for (const auto& p : pairs) EXPECT_EQ(p.k, Sign::Positive);
  EXPECT_EQ(pairs[0].x, 0);
  EXPECT_EQ(pairs[0].y, 1);
}

TEST(Multiples, SignedCycleHasNone) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Sign> s(5);
    for (auto& x : s) x = sgtest::random_sign(rng);
    EXPECT_TRUE(find_multiples(sgtest::signed_cycle(5, s)).empty());
  }
}

TEST(Multiples, NegatedVertexIsMultipleWithMinusOne) {
  const auto g = switching(k_bipartite(2, 3), std::vector<Vertex>{4});
  bool found = false;
  for (const auto& p : find_multiples(g)) {
    if (p.x == 4 || p.y == 4) {
      EXPECT_GE(std::min(p.x, p.y), 2);
      EXPECT_EQ(p.k, Sign::Negative);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Multiples, DeletionPreservesRank) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 300; ++t) {
    const auto g = sgtest::random_graph(rng, std::uniform_int_distribution<int>(2, 9)(rng), 0.5);
    const auto r = rank(g).rank;
    for (const auto& p : find_multiples(g)) {
      ++checked;
      EXPECT_EQ(rank(delete_vertices(g, std::vector<Vertex>{p.x})).rank, r);
      EXPECT_EQ(rank(delete_vertices(g, std::vector<Vertex>{p.y})).rank, r);
    }
  }
  EXPECT_GE(checked, 300);
}

TEST(Reduce, CompleteBipartiteCollapsesToEdge) {
  const auto g = k_bipartite(3, 3);
  const auto r = reduce(g);
  EXPECT_EQ(r.order(), 2);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(sgtest::reference_rank(g), 2u);
  EXPECT_EQ(sgtest::reference_rank(r), 2u);
}

TEST(Reduce, CycleUnchangedAndIsolatedCollapse) {
  const auto c6 = all_positive(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_EQ(reduce(c6), c6);
  const auto iso = reduce(SignedGraph(3));
  EXPECT_EQ(iso.order(), 1);
  EXPECT_EQ(iso.size(), 0u);
}

TEST(Reduce, ResultHasNoMultiplesAndSameRank) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto g = sgtest::random_graph(rng, std::uniform_int_distribution<int>(1, 9)(rng), 0.5);
    const auto r = reduce(g);
    EXPECT_TRUE(find_multiples(r).empty());
    EXPECT_EQ(sgtest::reference_rank(r), sgtest::reference_rank(g));
  }
}

TEST(Subgraphs, DeleteAndInducedAgree) {
  const auto g = SignedGraph(5, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}, {2, 3, Sign::Negative}, {3, 4, Sign::Positive}});
  const auto d = delete_vertices(g, std::vector<Vertex>{1});
  const auto h = induced_subgraph(g, std::vector<Vertex>{0, 2, 3, 4});
  EXPECT_EQ(d, h);
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.sign(1, 2), Sign::Negative);
}

TEST(CompactString, Format) {
  const SignedGraph g(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}});
  EXPECT_EQ(to_compact_string(g), "4:0-1+,1-2-");
}
