#include <gtest/gtest.h>

#include <random>

#include "../test_support.hpp"
#include "sgrank/classify.hpp"
#include "sgrank/families.hpp"

using namespace sgrank;

namespace {

std::vector<Sign> random_signs(std::mt19937_64& rng, std::size_t k) {
  std::vector<Sign> s(k);
  for (auto& x : s) x = sgtest::random_sign(rng);
  return s;
}

std::optional<char> gm2_letter(const SignedGraph& g) {
  const auto v = classify_gminus2(g);
  return v ? std::optional<char>(case_letter(v->which)) : std::nullopt;
}

std::optional<char> eq_letter(const SignedGraph& g) {
  const auto v = classify_equals_g(g);
  return v ? std::optional<char>(case_letter(v->which)) : std::nullopt;
}

SignedGraph theta_with_path_signs(int p, int l, int q, std::array<Sign, 3> ps) {
  // make each branch-to-branch path carry the requested sign via its first edge
  auto g = generate(ThetaSpec{p, l, q, {}});
  std::vector<Sign> s(g.size(), Sign::Positive);
  const auto paths = theta_paths(p, l, q);
  for (std::size_t i = 0; i < 3; ++i) s[static_cast<std::size_t>(g.edge_index(paths[i][0], paths[i][1]))] = ps[i];
  return g.with_signs(s);
}

}  // namespace

TEST(ClassifyGirthMinusTwo, Examples) {
  EXPECT_EQ(gm2_letter(generate(CompleteBipartiteSpec{2, 3})), 'A');
  EXPECT_EQ(gm2_letter(generate(CycleSpec{8, true})), 'B');
  EXPECT_EQ(gm2_letter(generate(CycleSpec{6, false})), 'C');
  EXPECT_EQ(gm2_letter(generate(CycleSpec{5, true})), std::nullopt);
  EXPECT_EQ(gm2_letter(generate(CycleSpec{8, false})), std::nullopt);
  EXPECT_EQ(gm2_letter(generate(CycleSpec{6, true})), std::nullopt);
}

TEST(ClassifyGirthMinusTwo, BalancedC4IsCompleteBipartiteFirst) {
  const auto v = classify_gminus2(generate(CycleSpec{4, true}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->which, GirthMinusTwoCase::BalancedCompleteBipartite);
}

TEST(ClassifyGirthMinusTwo, UnbalancedCompleteBipartiteRejected) {
  auto g = generate(CompleteBipartiteSpec{3, 3});
  std::vector<Sign> s(g.size(), Sign::Positive);
  s[0] = Sign::Negative;
  EXPECT_EQ(gm2_letter(g.with_signs(s)), std::nullopt);
  // a switching of a balanced graph stays accepted
  EXPECT_EQ(gm2_letter(switching(g, std::vector<Vertex>{0, 4})), 'A');
}

TEST(ClassifyEqualsGirth, Examples) {
  EXPECT_EQ(eq_letter(generate(CycleSpec{5, true})), 'a');
  EXPECT_EQ(eq_letter(generate(CycleSpec{6, true})), 'b');
  EXPECT_EQ(eq_letter(generate(CycleSpec{8, false})), 'b');
  EXPECT_EQ(eq_letter(generate(CycleSpec{8, true})), std::nullopt);
  EXPECT_EQ(eq_letter(generate(ThetaSpec{5, 5, 5, {}})), 'g');
  EXPECT_EQ(eq_letter(generate(T1Spec{t1_all_six_cycles_negative_signs()})), 'h');
  EXPECT_EQ(eq_letter(generate(T1Spec{})), std::nullopt);
  EXPECT_EQ(eq_letter(generate(CycleStarSpec{6, 2, false})), 'e');
  EXPECT_EQ(eq_letter(generate(CycleStarSpec{8, 1, true})), 'e');  // a pendant path of length 2, not a pendant star
}

TEST(ClassifyEqualsGirth, CanonicalUnicyclicAnySigning) {
  std::mt19937_64 rng(3);
  const CanonicalUnicyclicSpec spec{6, {{0, 1}, {2, 1}}, {}};
  const auto base = generate(spec);
  for (int t = 0; t < 64; ++t) {
    const auto g = base.with_signs(random_signs(rng, base.size()));
    EXPECT_EQ(eq_letter(g), 'd');
  }
}

TEST(ClassifyEqualsGirth, TriangleIsOddCycleNotTripartite) {
  const auto v = classify_equals_g(generate(CycleSpec{3, true}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->which, EqualsGirthCase::OddCycle);
}

TEST(ClassifyEqualsGirth, RankThreeTripartite) {
  const auto g = generate(TripartiteSpec{{2, 2, 1}, {}, {Sign::Positive, Sign::Negative, Sign::Positive}});
  const auto v = classify_equals_g(g);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->which, EqualsGirthCase::RankThreeTripartite);
  EXPECT_EQ(sgtest::reference_rank(g), 3u);
}

TEST(ClassifyEqualsGirth, GirthFourDeferredToRank) {
  // K_{3,3} minus one edge: biadjacency rank 2, so rank 4 at girth 4
  auto g = SignedGraph::unsigned_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
  ASSERT_EQ(sgtest::reference_rank(g), 4u);
  const auto v = classify_equals_g(g);
  ASSERT_TRUE(v);
  {
    EXPECT_EQ(v->which, EqualsGirthCase::GirthFourRankFour);
    EXPECT_TRUE(v->figure_deferred);
    const auto& cert = std::get<RankDeferredCertificate>(v->certificate);
    EXPECT_EQ(cert.rank, 4u);
    EXPECT_EQ(sgtest::reference_rank(cert.reduced), 4u);
    EXPECT_TRUE(find_multiples(cert.reduced).empty());
  }
}

TEST(ClassifyEqualsGirth, Theta535NeedsBothSixCyclesNegative) {
  // paths of orders 5, 3, 5; the 6-cycles pair the short path with each long one
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<Sign, 3> ps{(mask & 1) ? Sign::Negative : Sign::Positive, (mask & 2) ? Sign::Negative : Sign::Positive,
                                 (mask & 4) ? Sign::Negative : Sign::Positive};
    const auto g = theta_with_path_signs(5, 3, 5, ps);
    const bool both_negative = ps[0] * ps[1] == Sign::Negative && ps[2] * ps[1] == Sign::Negative;
    EXPECT_EQ(eq_letter(g).has_value(), both_negative);
    EXPECT_EQ(sgtest::reference_rank(g) == 6, both_negative);
  }
}

TEST(ClassifyEqualsGirth, Theta555NeedsBalance) {
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<Sign, 3> ps{(mask & 1) ? Sign::Negative : Sign::Positive, (mask & 2) ? Sign::Negative : Sign::Positive,
                                 (mask & 4) ? Sign::Negative : Sign::Positive};
    const bool balanced = mask == 0 || mask == 7;
    const auto g = theta_with_path_signs(5, 5, 5, ps);
    EXPECT_EQ(eq_letter(g).has_value(), balanced);
    EXPECT_EQ(sgtest::reference_rank(g) == 8, balanced);
  }
}

TEST(ClassifyEqualsGirth, RelabeledPatternsStillRecognized) {
  std::mt19937_64 rng(8);
  const std::vector<SignedGraph> graphs{generate(ThetaSpec{5, 5, 5, {}}),
                                        generate(T1Spec{t1_all_six_cycles_negative_signs()}),
                                        generate(CycleStarSpec{6, 2, false})};
  for (const auto& g : graphs) {
    const auto want = eq_letter(g);
    for (int t = 0; t < 20; ++t) {
      std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
      for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<SignedEdge> e;
      for (const auto& x : g.edges()) e.push_back({perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)], x.sign});
      EXPECT_EQ(eq_letter(SignedGraph(g.order(), e)), want);
    }
  }
}

TEST(Rank3Tripartite, Examples) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto tau = random_signs(rng, 3);
    const auto g = generate(TripartiteSpec{{2, 2, 1}, random_signs(rng, 5), {tau[0], tau[1], tau[2]}});
    const auto cert = is_rank3_tripartite(g);
    ASSERT_TRUE(cert);
    for (const auto& part : cert->parts) EXPECT_FALSE(part.empty());
  }
  EXPECT_FALSE(is_rank3_tripartite(generate(CycleSpec{5, true})));
  EXPECT_THROW((void)is_rank3_tripartite(SignedGraph(2)), std::invalid_argument);
}

TEST(Rank3Tripartite, K211AllSigningsAgreeWithRank) {
  // K_{2,1,1}: part {0,1}, then 2, then 3.
  const auto base = SignedGraph::unsigned_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  int accepted = 0;
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    std::vector<Sign> s(5);
    for (std::size_t i = 0; i < 5; ++i) s[i] = ((mask >> i) & 1U) ? Sign::Negative : Sign::Positive;
    const auto g = base.with_signs(s);
    const bool ok = is_rank3_tripartite(g).has_value();
    accepted += ok;
    EXPECT_EQ(ok, sgtest::reference_rank(g) == 3) << to_compact_string(g);
  }
  EXPECT_EQ(accepted, 16);
  // flipping 0-2 alone breaks the clone condition for {0,1}
  std::vector<Sign> s(5, Sign::Positive);
  s[0] = Sign::Negative;
  const auto broken = base.with_signs(s);
  EXPECT_FALSE(is_rank3_tripartite(broken));
  EXPECT_NE(sgtest::reference_rank(broken), 3u);
}

TEST(ExtremalUnicyclic, Examples) {
  const auto f1 = generate(CanonicalUnicyclicSpec{6, {{0, 1}}, {}});
  EXPECT_TRUE(is_extremal_canonical_unicyclic(f1));
  EXPECT_EQ(sgtest::reference_rank(f1), 6u);

  const auto antipodal = generate(CanonicalUnicyclicSpec{6, {{0, 1}, {3, 1}}, {}});
  EXPECT_FALSE(is_extremal_canonical_unicyclic(antipodal));
  EXPECT_GT(sgtest::reference_rank(antipodal), 6u);

  EXPECT_FALSE(is_extremal_canonical_unicyclic(generate(CanonicalUnicyclicSpec{5, {{0, 1}}, {}})));
  // a pendant path of length 2 is not a pendant star at a cycle vertex
  EXPECT_FALSE(is_extremal_canonical_unicyclic(SignedGraph::unsigned_graph(
      6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}})));
}

TEST(ExtremalUnicyclic, CertificateGaps) {
  const auto cert = is_extremal_canonical_unicyclic(generate(CanonicalUnicyclicSpec{8, {{0, 2}, {2, 1}, {4, 1}}, {}}));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->centers, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(cert->gaps, (std::vector<int>{1, 1, 3}));
  // moving the last center makes two gaps even
  EXPECT_FALSE(is_extremal_canonical_unicyclic(generate(CanonicalUnicyclicSpec{8, {{0, 2}, {2, 1}, {5, 1}}, {}})));
}

TEST(ExtremalUnicyclic, RejectsInvalidInput) {
  EXPECT_THROW((void)is_extremal_canonical_unicyclic(generate(CycleSpec{6, true})), std::invalid_argument);
  EXPECT_THROW((void)is_extremal_canonical_unicyclic(generate(ThetaSpec{4, 4, 4, {}})), std::invalid_argument);
  EXPECT_THROW((void)is_extremal_canonical_unicyclic(generate(PathSpec{4, {}})), std::invalid_argument);
}

TEST(Classifiers, RejectDisconnectedAndForests) {
  const auto forest = generate(PathSpec{4, {}});
  const auto split = SignedGraph::unsigned_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW((void)classify_gminus2(forest), std::invalid_argument);
  EXPECT_THROW((void)classify_equals_g(forest), std::invalid_argument);
  EXPECT_THROW((void)classify_gminus2(split), std::invalid_argument);
  EXPECT_THROW((void)classify_equals_g(split), std::invalid_argument);
  EXPECT_TRUE(std::holds_alternative<NonExtremal>(classify(forest)));
  EXPECT_TRUE(std::holds_alternative<NonExtremal>(classify(split)));
}

TEST(Classifiers, NeverBothAndAgreeWithRank) {
  std::mt19937_64 rng(101);
  int seen = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const auto g = sgtest::random_connected(rng, n, std::uniform_real_distribution<double>(0.0, 0.5)(rng));
    const auto gr = sgtest::reference_girth(g);
    if (!gr) continue;
    ++seen;
    const auto r = static_cast<int>(sgtest::reference_rank(g));
    const auto a = classify_gminus2(g);
    const auto b = classify_equals_g(g);
    EXPECT_FALSE(a && b);
    EXPECT_EQ(a.has_value(), r == *gr - 2) << to_compact_string(g);
    EXPECT_EQ(b.has_value(), r == *gr) << to_compact_string(g);
  }
  EXPECT_GT(seen, 1000);
}
