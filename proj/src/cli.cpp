#include "qbafx/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "qbafx/aa_bridge.hpp"
#include "qbafx/bench.hpp"
#include "qbafx/io.hpp"

namespace qbafx {

namespace {

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 1;
  std::string qbaf_class;
  std::string mode;
  std::optional<double> epsilon;
  unsigned threads = 1;
};

const char* kConsistentNote =
    "note: the topics are strength-consistent; the empty set is the only explanation\n";

json result_json(const ExplanationSet& r) {
  return {{"kind", std::string(kind_name(r.kind))},
          {"sets", family_json(r.sets)},
          {"consistent", r.scenario_consistent},
          {"stats",
           {{"candidates_checked", r.stats.candidates_checked},
            {"supersets_skipped", r.stats.supersets_skipped},
            {"cyclic_rejections", r.stats.cyclic_rejections}}}};
}

ScenarioFile load_scenario(const std::string& path, const Globals& g) {
  ScenarioFile f = parse_scenario_file(load_json_file(path));
  if (!g.qbaf_class.empty()) f.qbaf_class = g.qbaf_class;
  if (!g.mode.empty()) f.mode = g.mode;
  if (g.epsilon) f.epsilon = g.epsilon;
  return f;
}

std::vector<ExplanationKind> kinds_for(bool all, const std::string& kind) {
  if (all || kind.empty())
    return {ExplanationKind::SSI, ExplanationKind::CSI, ExplanationKind::NSI};
  return {parse_kind(kind)};
}

void print_results(const std::vector<ExplanationSet>& results, bool labelled, json* extra,
                   const Globals& g, std::ostream& out) {
  if (g.json_out) {
    json doc;
    if (results.size() == 1) {
      doc = result_json(results[0]);
    } else {
      doc = {{"results", json::array()}};
      for (const auto& r : results) doc["results"].push_back(result_json(r));
    }
    if (extra) doc.update(*extra);
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& r : results) {
    if (labelled) out << kind_name(r.kind) << ": ";
    out << format_family(r.sets) << '\n';
  }
  if (!results.empty() && results[0].scenario_consistent) out << kConsistentNote;
}

int cmd_evaluate(const std::string& path, const std::string& sem_name, const Globals& g,
                 std::ostream& out) {
  SemanticsSpec sem = SemanticsSpec::by_name(sem_name);
  json doc = load_json_file(path);
  Qbaf q = sem.is_stable() ? af_to_qbaf(parse_af(doc)) : parse_qbaf(doc, sem.domain());
  auto st = final_strengths(q, sem);
  if (g.json_out) {
    json j = json::object();
    for (const auto& [a, v] : st) j[a.name()] = strength_json(v, sem.domain());
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [a, v] : st) out << a.name() << ": " << format_strength(v, sem.domain()) << '\n';
  }
  return 0;
}

int cmd_explain(const std::string& path, const std::string& kind, bool all_kinds, bool use_oracle,
                const Globals& g, std::ostream& out) {
  Scenario s = to_scenario(load_scenario(path, g));
  SearchOptions opt;
  opt.threads = g.threads;
  std::vector<ExplanationSet> results;
  for (auto k : kinds_for(all_kinds, kind))
    results.push_back(use_oracle ? oracle(s, k, true) : explain(s, k, opt));
  print_results(results, all_kinds, nullptr, g, out);
  return 0;
}

int cmd_aa(const std::string& path, const std::string& kind, const Globals& g, std::ostream& out) {
  ScenarioFile f = load_scenario(path, g);
  Af before = parse_af(f.before, "/before"), after = parse_af(f.after, "/after");
  ConsistencyMode mode = parse_mode(f.mode.value_or("strict"));
  SearchOptions opt;
  opt.threads = g.threads;
  std::vector<ExplanationSet> results;
  for (auto k : kinds_for(false, kind))
    results.push_back(aa_explain(before, after, ArgId(f.topic_x), ArgId(f.topic_y), mode, k, opt));

  auto status_line = [](const Af& af) {
    std::string line;
    for (const auto& [a, st] : af_acceptance(af)) {
      if (!line.empty()) line += ' ';
      line += a.name() + ":" + status_label(st);
    }
    return line;
  };
  if (g.json_out) {
    auto side = [](const Af& af) {
      json st = json::object();
      for (const auto& [a, v] : af_acceptance(af)) st[a.name()] = std::string(1, status_label(v));
      return json{{"extensions", family_json(stable_extensions(af))}, {"status", st}};
    };
    json extra = {{"before", side(before)}, {"after", side(after)}};
    print_results(results, true, &extra, g, out);
    return 0;
  }
  out << "extensions before: " << format_family(stable_extensions(before)) << '\n';
  out << "extensions after: " << format_family(stable_extensions(after)) << '\n';
  out << "status before: " << status_line(before) << '\n';
  out << "status after: " << status_line(after) << '\n';
  print_results(results, true, nullptr, g, out);
  return 0;
}

struct BenchArgs {
  std::string study = "eval";
  std::vector<std::size_t> sizes;
  std::optional<double> degree;
  double change_fraction = 0.2;
  std::optional<std::size_t> samples;
  std::string out_path;
  std::string plot_path;
};

int cmd_bench(const BenchArgs& b, const Globals& g, std::ostream& out) {
  BenchConfig cfg;
  cfg.seed = g.seed;
  cfg.change_fraction = b.change_fraction;
  if (b.study == "eval") {
    cfg.eval_sizes = b.sizes;
    cfg.eval_degree = b.degree.value_or(3.0);
    cfg.eval_samples = b.samples.value_or(50);
  } else {
    cfg.explain_sizes = b.sizes;
    cfg.explain_degree = b.degree.value_or(1.1);
    cfg.explain_samples = b.samples.value_or(10);
  }
  BenchReport rep = run_benchmark(cfg);
  if (b.out_path.empty()) {
    write_csv(rep, out);
  } else {
    std::ofstream f(b.out_path);
    if (!f) throw Error(ErrorCode::SyntaxError, "cannot write " + b.out_path);
    write_csv(rep, f);
  }
  if (!b.plot_path.empty()) {
    std::ofstream f(b.plot_path);
    if (!f) throw Error(ErrorCode::SyntaxError, "cannot write " + b.plot_path);
    write_svg(rep, f);
  }
  if (b.study != "eval")
    out << "# cyclic reversal rejections: " << rep.cyclic_rejections << " of "
        << rep.candidates_checked << " candidates\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explain strength inconsistencies between two versions of a bipolar argumentation graph"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::vector<std::string> sem_names = SemanticsSpec::gradual_names();
  sem_names.push_back("stable");
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--class", g.qbaf_class, "Graph class for reversals")
      ->check(CLI::IsMember({"acyclic", "all"}));
  app.add_option("--mode", g.mode, "Consistency mode")->check(CLI::IsMember({"strict", "weak"}));
  app.add_option("--epsilon", g.epsilon, "Equality tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", g.threads, "Worker threads for the search")->check(CLI::PositiveNumber);

  std::string path, sem_name = "naive-sum", kind;
  bool all_kinds = false, use_oracle = false;

  auto* ev = app.add_subcommand("evaluate", "Final strengths of every argument");
  ev->add_option("qbaf", path, "QBAF file")->required();
  ev->add_option("--semantics", sem_name, "Semantics name")->check(CLI::IsMember(sem_names));

  auto* ex = app.add_subcommand("explain", "Minimal explanations for a scenario");
  ex->add_option("scenario", path, "Scenario file")->required();
  ex->add_option("--kind", kind, "ssi, csi or nsi")->check(CLI::IsMember({"ssi", "csi", "nsi"}));
  ex->add_flag("--all-kinds", all_kinds, "Report all three kinds");
  ex->add_flag("--oracle", use_oracle, "Use the brute-force enumeration");

  auto* aa = app.add_subcommand("aa", "Explain an acceptance change between two frameworks");
  aa->add_option("scenario", path, "Scenario file over frameworks")->required();
  aa->add_option("--kind", kind, "ssi, csi or nsi")->check(CLI::IsMember({"ssi", "csi", "nsi"}));

  BenchArgs b;
  auto* be = app.add_subcommand("bench", "Timing study on random graphs, CSV output");
  be->add_option("--study", b.study, "eval or explain")->check(CLI::IsMember({"eval", "explain"}));
  be->add_option("--sizes", b.sizes, "Argument counts")->delimiter(',')->required();
  be->add_option("--degree", b.degree, "Average out-degree");
  be->add_option("--change-fraction", b.change_fraction, "Share of arguments touched by updates")
      ->check(CLI::Range(0.0, 1.0));
  be->add_option("--samples", b.samples, "Samples per size");
  be->add_option("--out", b.out_path, "CSV file (default stdout)");
  be->add_option("--plot", b.plot_path, "SVG plot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ev->parsed()) return cmd_evaluate(path, sem_name, g, out);
    if (ex->parsed()) return cmd_explain(path, kind.empty() ? "ssi" : kind, all_kinds, use_oracle, g, out);
    if (aa->parsed()) return cmd_aa(path, kind, g, out);
    if (be->parsed()) return cmd_bench(b, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qbafx
