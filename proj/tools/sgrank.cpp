// sgrank: analyze, classify, generate and verify signed graphs by rank and girth.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgrank/sgrank.hpp"

namespace {

using namespace sgrank;

constexpr int kExitCounterexamples = 1;
constexpr int kExitError = 2;

std::vector<Sign> parse_signs(const std::string& text) {
  std::vector<Sign> out;
  for (char c : text) {
    if (c == '+') out.push_back(Sign::Positive);
    else if (c == '-') out.push_back(Sign::Negative);
    else if (c == ',' || c == ' ') continue;
    else throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
  }
  return out;
}

std::map<int, int> parse_leaves(const std::string& text) {
  std::map<int, int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("leaf spec '" + item + "' is not pos:count");
    const int pos = std::stoi(item.substr(0, colon));
    const int cnt = std::stoi(item.substr(colon + 1));
    if (!out.emplace(pos, cnt).second) throw std::invalid_argument("star position repeated: " + std::to_string(pos));
  }
  return out;
}

struct GenerateOptions {
  std::string family;
  std::vector<int> params;
  std::string output;
  bool balanced = false;
  bool unbalanced = false;
  std::string signs;
  std::string leaves;
  std::string polarity;
  std::string tau;
  bool t1_negative = false;
};

void require_params(const GenerateOptions& o, std::size_t count, const std::string& usage) {
  if (o.params.size() != count) throw std::invalid_argument("usage: generate " + usage);
}

FamilySpec build_spec(const GenerateOptions& o) {
  if (o.balanced && o.unbalanced) throw std::invalid_argument("--balanced and --unbalanced are exclusive");
  const auto& f = o.family;
  if (f == "path") {
    require_params(o, 1, "path N [--signs S]");
    return PathSpec{o.params[0], parse_signs(o.signs)};
  }
  if (f == "cycle") {
    require_params(o, 1, "cycle N [--balanced|--unbalanced]");
    return CycleSpec{o.params[0], !o.unbalanced};
  }
  if (f == "complete-bipartite") {
    require_params(o, 2, "complete-bipartite A B");
    return CompleteBipartiteSpec{o.params[0], o.params[1]};
  }
  if (f == "tripartite") {
    require_params(o, 3, "tripartite A B C [--polarity S] [--tau S]");
    TripartiteSpec s;
    s.sizes = {o.params[0], o.params[1], o.params[2]};
    s.polarity = parse_signs(o.polarity);
    if (!o.tau.empty()) {
      const auto t = parse_signs(o.tau);
      if (t.size() != 3) throw std::invalid_argument("--tau takes exactly 3 signs");
      s.tau = {t[0], t[1], t[2]};
    }
    return s;
  }
  if (f == "unicyclic") {
    require_params(o, 1, "unicyclic G --leaves pos:count,... [--signs S]");
    return CanonicalUnicyclicSpec{o.params[0], parse_leaves(o.leaves), parse_signs(o.signs)};
  }
  if (f == "theta") {
    require_params(o, 3, "theta P L Q [--signs S]");
    return ThetaSpec{o.params[0], o.params[1], o.params[2], parse_signs(o.signs)};
  }
  if (f == "t1") {
    require_params(o, 0, "t1 [--signs S | --all-six-cycles-unbalanced]");
    if (o.t1_negative && !o.signs.empty()) throw std::invalid_argument("--signs and --all-six-cycles-unbalanced are exclusive");
    return T1Spec{o.t1_negative ? t1_all_six_cycles_negative_signs() : parse_signs(o.signs)};
  }
  if (f == "cycle-star") {
    require_params(o, 2, "cycle-star G K [--balanced|--unbalanced]");
    return CycleStarSpec{o.params[0], o.params[1], !o.unbalanced};
  }
  throw std::invalid_argument("unknown family '" + f +
                              "' (path, cycle, complete-bipartite, tripartite, unicyclic, theta, t1, cycle-star)");
}

int cmd_generate(const GenerateOptions& o) {
  const auto spec = build_spec(o);
  const auto g = generate(spec);
  const auto expected = expected_rank(spec);
  const std::string note = expected ? "expected rank " + std::to_string(*expected) : "expected rank: no closed form";
  if (o.output.empty()) {
    std::cout << "# " << note << '\n';
    write_sgr(std::cout, g);
  } else {
    std::ofstream out(o.output);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    write_sgr(out, g);
    std::cout << note << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& path, bool json) {
  const auto report = analyze(load_sgr(path));
  if (json)
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << format_table(report);
  return 0;
}

int cmd_classify(const std::string& path, bool json) {
  const auto cls = classify(load_sgr(path));
  if (json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["classification"] = classification_json(cls);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << verdict_label(cls) << '\n';
    const Certificate* cert = nullptr;
    if (const auto* v = std::get_if<GirthMinusTwo>(&cls)) cert = &v->certificate;
    if (const auto* v = std::get_if<EqualsGirth>(&cls)) cert = &v->certificate;
    if (cert) std::cout << "certificate: " << certificate_json(*cert).dump() << '\n';
  }
  return 0;
}

struct VerifyOptions {
  SweepConfig config;
  std::string checks;
  bool json = false;
  std::string output;
  std::string csv;
  std::string dump_dir;
};

int cmd_verify(VerifyOptions o) {
  if (!o.checks.empty()) {
    o.config.checks.clear();
    std::stringstream ss(o.checks);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty()) o.config.checks.push_back(parse_check(name));
  }
  for (const auto& path : o.config.graph6_sources)
    if (!std::filesystem::exists(path)) throw std::runtime_error("cannot open graph6 file " + path);

  const auto report = run(o.config);
  const std::string text = o.json ? to_json(report, o.config).dump(2) + "\n" : format_summary(report);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    out << text;
    std::cerr << "report written to " << o.output << '\n';
  }
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw std::runtime_error("cannot write " + o.csv);
    write_counterexample_csv(out, report);
  }
  if (!o.dump_dir.empty()) {
    std::filesystem::create_directories(o.dump_dir);
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
      const auto& ce = report.counterexamples[i];
      const auto file = std::filesystem::path(o.dump_dir) / (std::to_string(i) + "_" + std::string(check_name(ce.check)) + ".sgr");
      std::ofstream out(file);
      out << "# check " << check_name(ce.check) << "\n# expected " << ce.expected << "\n# observed " << ce.observed << '\n';
      write_sgr(out, ce.graph);
    }
  }
  return report.all_passed() ? 0 : kExitCounterexamples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, girth and extremal-case classification of signed graphs"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants, rank and classification of an .sgr file");
  analyze_cmd->add_option("file", path, "Signed graph in .sgr format")->required();
  analyze_cmd->add_flag("--json", json, "Emit JSON");

  auto* classify_cmd = app.add_subcommand("classify", "Classify an .sgr file against the extremal cases");
  classify_cmd->add_option("file", path, "Signed graph in .sgr format")->required();
  classify_cmd->add_flag("--json", json, "Emit JSON");

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a family instance in .sgr format");
  generate_cmd->add_option("family", gen.family,
                           "path, cycle, complete-bipartite, tripartite, unicyclic, theta, t1, cycle-star")
      ->required();
  generate_cmd->add_option("params", gen.params, "Integer parameters of the family");
  generate_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");
  generate_cmd->add_flag("--balanced", gen.balanced, "Balanced signing (cycle, cycle-star)");
  generate_cmd->add_flag("--unbalanced", gen.unbalanced, "Unbalanced signing (cycle, cycle-star)");
  generate_cmd->add_option("--signs", gen.signs, "Edge signs in canonical edge order, e.g. ++-+");
  generate_cmd->add_option("--leaves", gen.leaves, "Pendant leaves as pos:count,... (unicyclic)");
  generate_cmd->add_option("--polarity", gen.polarity, "Per-vertex polarity signs (tripartite)");
  generate_cmd->add_option("--tau", gen.tau, "Part-pair signs for (1,2),(1,3),(2,3) (tripartite)");
  generate_cmd->add_flag("--all-six-cycles-unbalanced", gen.t1_negative, "Make every 6-cycle of T1 negative");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check the rank/girth relations");
  verify_cmd->add_option("--max-n", ver.config.max_n_dense, "Largest order of the labeled dense sweep")
      ->check(CLI::Range(0, 8));
  verify_cmd->add_option("--sparse-max-n", ver.config.max_n_sparse, "Largest order of the sparse sweep")
      ->check(CLI::Range(0, kMaxSmallOrder));
  verify_cmd->add_option("--max-cyclomatic", ver.config.max_cyclomatic, "Cyclomatic bound of the sparse sweep")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--graph6", ver.config.graph6_sources, "Additional underlying graphs (graph6, repeatable)");
  verify_cmd->add_option("--jobs", ver.config.parallelism, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--checks", ver.checks, "Comma-separated check names (default: every check except the self-test)");
  verify_cmd->add_option("--max-counterexamples", ver.config.max_counterexamples, "Counterexamples kept per check");
  verify_cmd->add_flag("--json", ver.json, "Emit the report as JSON");
  verify_cmd->add_option("--output", ver.output, "Write the report to a file");
  verify_cmd->add_option("--csv", ver.csv, "Write counterexamples as CSV");
  verify_cmd->add_option("--dump-dir", ver.dump_dir, "Write each counterexample as an .sgr file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(path, json);
    if (*classify_cmd) return cmd_classify(path, json);
    if (*generate_cmd) return cmd_generate(gen);
    if (*verify_cmd) return cmd_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
