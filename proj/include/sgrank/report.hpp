#pragma once

// Analysis summaries and JSON/CSV/text rendering for the command-line tool.
// JSON objects keep insertion order so output is byte-stable.

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "sgrank/classify.hpp"
#include "sgrank/exact_rank.hpp"
#include "sgrank/invariants.hpp"
#include "sgrank/sgr_io.hpp"
#include "sgrank/sweep.hpp"

namespace sgrank {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
  int n = 0;
  std::size_t m = 0;
  int components = 0;
  int cyclomatic = 0;
  int pendant_count = 0;
  bool bipartite = true;
  std::optional<int> girth;
  bool balanced = true;
  std::size_t rank = 0;
  std::size_t nullity = 0;
  Classification classification;
};

inline AnalysisReport analyze(const SignedGraph& g) {
  const auto prof = profile(g);
  const auto r = rank(g);
  return AnalysisReport{g.order(),        g.size(),       prof.components, prof.cyclomatic, prof.pendant_count,
                        prof.bipartite,   prof.girth,     prof.balanced,   r.rank,          r.nullity,
                        classify(g)};
}

inline std::string case_description(GirthMinusTwoCase c) {
  switch (c) {
    case GirthMinusTwoCase::BalancedCompleteBipartite: return "balanced complete bipartite, girth 4";
    case GirthMinusTwoCase::BalancedCycle: return "balanced cycle, girth 0 mod 4";
    case GirthMinusTwoCase::UnbalancedCycle: return "unbalanced cycle, girth 2 mod 4";
  }
  return "";
}

inline std::string case_description(EqualsGirthCase c) {
  switch (c) {
    case EqualsGirthCase::OddCycle: return "odd cycle";
    case EqualsGirthCase::CycleWithFullRank: return "nonsingular even cycle";
    case EqualsGirthCase::RankThreeTripartite: return "complete tripartite of rank 3";
    case EqualsGirthCase::CanonicalUnicyclic: return "canonical unicyclic, even cycle, odd gaps between star centers";
    case EqualsGirthCase::CycleWithPendantStar: return "cycle with one pendant star";
    case EqualsGirthCase::GirthFourRankFour: return "girth 4 with rank 4 (decided by rank)";
    case EqualsGirthCase::Theta: return "theta graph";
    case EqualsGirthCase::SubdividedK4: return "T1 with all 6-cycles negative";
  }
  return "";
}

namespace detail {

inline std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

template <class Range>
Json sign_list(const Range& r) {
  Json out = Json::array();
  for (Sign s : r) out.push_back(sign_str(s));
  return out;
}

}  // namespace detail

inline Json certificate_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        Json j;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Bipartition>) {
          j["type"] = "bipartition";
          j["left"] = c.left;
          j["right"] = c.right;
        } else if constexpr (std::is_same_v<T, CycleCertificate>) {
          j["type"] = "cycle";
          j["cycle"] = c.cycle;
          j["sign"] = detail::sign_str(c.sign);
        } else if constexpr (std::is_same_v<T, TripartiteCertificate>) {
          j["type"] = "complete_tripartite";
          j["parts"] = c.parts;
          j["representatives"] = c.representatives;
          j["polarity"] = c.polarity;
        } else if constexpr (std::is_same_v<T, UnicyclicCertificate>) {
          j["type"] = "canonical_unicyclic";
          j["cycle"] = c.cycle;
          j["centers"] = c.centers;
          j["gaps"] = c.gaps;
        } else if constexpr (std::is_same_v<T, CycleStarCertificate>) {
          j["type"] = "cycle_star";
          j["cycle"] = c.cycle;
          j["attachment"] = c.attachment;
          j["center"] = c.center;
          j["leaves"] = c.leaves;
          j["cycle_sign"] = detail::sign_str(c.cycle_sign);
        } else if constexpr (std::is_same_v<T, ThetaCertificate>) {
          j["type"] = "theta";
          j["branches"] = c.branches;
          j["paths"] = c.paths;
          j["path_signs"] = detail::sign_list(c.path_signs);
        } else if constexpr (std::is_same_v<T, SubdividedK4Certificate>) {
          j["type"] = "subdivided_k4";
          j["branches"] = c.branches;
          j["six_cycles"] = c.six_cycles;
          j["six_cycle_signs"] = detail::sign_list(c.six_cycle_signs);
        } else if constexpr (std::is_same_v<T, RankDeferredCertificate>) {
          j["type"] = "rank_deferred";
          j["reduced"] = to_compact_string(c.reduced);
          j["reduced_rank"] = c.rank;
        }
        return j;
      },
      cert);
}

inline Json classification_json(const Classification& cls) {
  Json j;
  if (const auto* v = std::get_if<GirthMinusTwo>(&cls)) {
    j["verdict"] = "girth_minus_two";
    j["case"] = std::string(1, case_letter(v->which));
    j["description"] = case_description(v->which);
    j["certificate"] = certificate_json(v->certificate);
  } else if (const auto* v = std::get_if<EqualsGirth>(&cls)) {
    j["verdict"] = "equals_girth";
    j["case"] = std::string(1, case_letter(v->which));
    j["description"] = case_description(v->which);
    j["figure_deferred"] = v->figure_deferred;
    j["certificate"] = certificate_json(v->certificate);
  } else {
    j["verdict"] = "non_extremal";
    j["reason"] = std::get<NonExtremal>(cls).reason;
  }
  return j;
}

inline std::string verdict_label(const Classification& cls) {
  if (const auto* v = std::get_if<GirthMinusTwo>(&cls))
    return std::string("GirthMinusTwo(") + case_letter(v->which) + "): " + case_description(v->which);
  if (const auto* v = std::get_if<EqualsGirth>(&cls))
    return std::string("EqualsGirth(") + case_letter(v->which) + "): " + case_description(v->which);
  return "NonExtremal: " + std::get<NonExtremal>(cls).reason;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["n"] = r.n;
  j["m"] = r.m;
  j["components"] = r.components;
  j["cyclomatic"] = r.cyclomatic;
  j["pendant_count"] = r.pendant_count;
  j["bipartite"] = r.bipartite;
  j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
  j["balanced"] = r.balanced;
  j["rank"] = r.rank;
  j["nullity"] = r.nullity;
  j["classification"] = classification_json(r.classification);
  return j;
}

inline std::string format_table(const AnalysisReport& r) {
  std::ostringstream out;
  const auto row = [&](const char* key, const std::string& value) {
    out << std::left << std::setw(16) << key << value << '\n';
  };
  const auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  row("vertices", std::to_string(r.n));
  row("edges", std::to_string(r.m));
  row("components", std::to_string(r.components));
  row("cyclomatic", std::to_string(r.cyclomatic));
  row("pendants", std::to_string(r.pendant_count));
  row("bipartite", yn(r.bipartite));
  row("girth", r.girth ? std::to_string(*r.girth) : std::string("none"));
  row("balanced", yn(r.balanced));
  row("rank", std::to_string(r.rank));
  row("nullity", std::to_string(r.nullity));
  row("verdict", verdict_label(r.classification));
  return out.str();
}

// ---------------------------------------------------------------------------
// Sweep reports

inline Json to_json(const SweepReport& r, const SweepConfig& cfg, bool include_timing = true) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json c;
  c["max_n_dense"] = cfg.max_n_dense;
  c["max_n_sparse"] = cfg.max_n_sparse;
  c["max_cyclomatic"] = cfg.max_cyclomatic;
  c["graph6_sources"] = cfg.graph6_sources;
  Json checks = Json::array();
  for (Check k : cfg.checks) checks.push_back(std::string(check_name(k)));
  c["checks"] = checks;
  j["config"] = c;
  j["underlying_graphs"] = r.underlying_graphs;
  j["instances_checked"] = r.instances_checked;
  Json sources;
  for (Source s : {Source::Dense, Source::Sparse, Source::Graph6}) {
    const auto it = r.sources.find(s);
    Json t;
    t["graphs"] = it == r.sources.end() ? 0 : it->second.graphs;
    t["instances"] = it == r.sources.end() ? 0 : it->second.instances;
    if (s == Source::Graph6) t["skipped"] = r.graph6_skipped;
    sources[std::string(source_name(s))] = t;
  }
  j["sources"] = sources;
  Json per_check;
  for (const auto& [k, t] : r.checks) per_check[std::string(check_name(k))] = Json{{"passed", t.passed}, {"failed", t.failed}};
  j["checks"] = per_check;
  Json hist;
  for (const auto& [d, count] : r.rank_minus_girth) hist[std::to_string(d)] = count;
  j["rank_minus_girth"] = hist;
  Json verdicts;
  for (const auto& [v, count] : r.verdicts) verdicts[v] = count;
  j["verdicts"] = verdicts;
  j["counterexample_count"] = r.total_failures();
  Json cex = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json e;
    e["check"] = std::string(check_name(ce.check));
    e["graph"] = to_compact_string(ce.graph);
    e["sgr"] = to_sgr(ce.graph);
    e["expected"] = ce.expected;
    e["observed"] = ce.observed;
    cex.push_back(e);
  }
  j["counterexamples"] = cex;
  j["passed"] = r.all_passed();
  if (include_timing) j["timing"] = Json{{"elapsed_seconds", r.elapsed_seconds}};
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_counterexample_csv(std::ostream& out, const SweepReport& r) {
  out << "check,graph,expected,observed\n";
  for (const auto& ce : r.counterexamples)
    out << csv_field(std::string(check_name(ce.check))) << ',' << csv_field(to_compact_string(ce.graph)) << ','
        << csv_field(ce.expected) << ',' << csv_field(ce.observed) << '\n';
}

inline std::string format_summary(const SweepReport& r) {
  std::ostringstream out;
  out << "underlying graphs: " << r.underlying_graphs << '\n';
  out << "signed instances:  " << r.instances_checked << '\n';
  for (const auto& [k, t] : r.checks)
    out << "  " << std::left << std::setw(24) << check_name(k) << " passed " << t.passed << ", failed " << t.failed
        << '\n';
  out << "counterexamples:   " << r.total_failures() << '\n';
  for (const auto& ce : r.counterexamples)
    out << "  [" << check_name(ce.check) << "] " << to_compact_string(ce.graph) << ": expected " << ce.expected
        << "; observed " << ce.observed << '\n';
  out << "elapsed:           " << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace sgrank
