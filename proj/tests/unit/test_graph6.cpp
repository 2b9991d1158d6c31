#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sgrank/families.hpp"
#include "sgrank/graph6.hpp"

using namespace sgrank;

namespace {

// Straightforward graph6 encoder for round trips (n < 63).
std::string encode(const SignedGraph& g) {
  std::string out(1, static_cast<char>(63 + g.order()));
  int bits = 0;
  int chunk = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + chunk);
        bits = chunk = 0;
      }
    }
  if (bits) out += static_cast<char>(63 + (chunk << (6 - bits)));
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Graph6, KnownStrings) {
  // "Bw" is the triangle, "C~" is K4, "Dhc" is the cycle 0-1-2-3-4
  EXPECT_EQ(parse_graph6("Bw"), generate(CycleSpec{3, true}));
  EXPECT_EQ(parse_graph6("C~").size(), 6u);
  const auto c5 = parse_graph6("Dhc");
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.size(), 5u);
  for (const auto& d : degrees(c5)) EXPECT_EQ(d, 2);
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), parse_graph6("Bw"));
  EXPECT_EQ(parse_graph6("@").order(), 1);
}

TEST(Graph6, RoundTrip) {
  for (const auto& g : {generate(ThetaSpec{5, 3, 5, {}}), generate(T1Spec{}), generate(CycleSpec{12, true}),
                        generate(CompleteBipartiteSpec{4, 5})})
    EXPECT_EQ(parse_graph6(encode(g)), g.underlying());
}

TEST(Graph6, LongForm) {
  // n = 63 uses the '~' prefix with three size bytes
  std::string s = "~??~";
  s += std::string((63 * 62 / 2 + 5) / 6, '?');
  const auto g = parse_graph6(s);
  EXPECT_EQ(g.order(), 63);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Graph6, Malformed) {
  EXPECT_THROW((void)parse_graph6(""), Graph6Error);
  EXPECT_THROW((void)parse_graph6("B"), Graph6Error);
  EXPECT_THROW((void)parse_graph6("Bww"), Graph6Error);
  EXPECT_THROW((void)parse_graph6("B "), Graph6Error);
  try {
    (void)parse_graph6("Bww", 7);
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.record(), 7u);
    EXPECT_NE(std::string(e.what()).find("record 7"), std::string::npos);
  }
}

TEST(Graph6, LoadFile) {
  const auto path = temp_file("sgrank_test_c5.g6", "Dhc\n");
  const auto gs = load_graph6(path);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].size(), 5u);
  std::filesystem::remove(path);
}

TEST(Graph6, LoadFileReportsRecordIndex) {
  const auto path = temp_file("sgrank_test_bad.g6", "Bw\n\nC~\nCx!\n");
  try {
    (void)load_graph6(path);
    FAIL();
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.record(), 3u);
  }
  std::filesystem::remove(path);
}

TEST(Graph6, MissingFile) { EXPECT_THROW((void)load_graph6("/nonexistent/missing.g6"), std::runtime_error); }
