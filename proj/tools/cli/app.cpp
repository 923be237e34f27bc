#include "cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "cli/corpus.hpp"
#include "cli/exit_codes.hpp"
#include "cli/input.hpp"
#include "cli/report.hpp"
#include "locdom/edge_list.hpp"
#include "locdom/errors.hpp"
#include "locdom/generate.hpp"
#include "locdom/graph6.hpp"

namespace locdom::cli {

namespace {

struct Settings {
  std::string input;
  std::string mode = "exact";
  std::size_t max_exact = default_exact_ceiling();
  std::size_t max_oracle = 16;
  unsigned jobs = 1;
  bool json = false;
  bool timings = false;
  bool sk_all = false;
  std::optional<std::string> out_path;
  std::optional<std::string> summary_path;
  std::vector<std::string> gens;
  std::size_t k = 0;
  std::string to = "graph6";
  std::string kind;
  std::size_t order = 0;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::uint64_t count = 1;
  std::uint64_t heuristic_seed = ConstructOptions{}.seed;
};

Mode parse_mode(const std::string& m) {
  if (m == "exact") return Mode::Exact;
  if (m == "heuristic") return Mode::Heuristic;
  throw Error(Errc::InvalidParameter, "unknown mode '" + m + "'");
}

Phases base_phases(const Settings& s) {
  Phases ph;
  ph.mode = parse_mode(s.mode);
  ph.construct.exact.max_order = s.max_exact;
  ph.construct.exact.workers = std::max(1u, s.jobs);
  ph.construct.seed = s.heuristic_seed;
  ph.oracle.max_order = s.max_oracle;
  ph.timings = true;
  return ph;
}

void emit(const Graph& g, const RunReport& r, const Settings& s, std::ostream& out) {
  if (s.json) {
    out << to_json(g, r, true).dump(2) << '\n';
  } else {
    out << render_text(r);
  }
}

int cmd_check(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  Phases ph;
  ph.twins = true;
  emit(g, analyze(g, ph), s, out);
  return kOk;
}

int cmd_bound(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  Phases ph = base_phases(s);
  ph.bound = true;
  const RunReport r = analyze(g, ph);
  emit(g, r, s, out);
  const BoundReport& b = *r.bound;
  if (b.mode == Mode::Exact && g.order() > 0 && !b.certified) return kBoundViolation;
  return kOk;
}

int cmd_solve(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  Phases ph = base_phases(s);
  ph.solve = true;
  emit(g, analyze(g, ph), s, out);
  return kOk;
}

int cmd_partition2(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  Phases ph = base_phases(s);
  ph.partition2 = true;
  emit(g, analyze(g, ph), s, out);
  return kOk;
}

int cmd_sk(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  Phases ph = base_phases(s);
  ph.sk = s.k;
  emit(g, analyze(g, ph), s, out);
  return kOk;
}

int cmd_corpus(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<CorpusSource> sources;
  std::unique_ptr<std::ifstream> file;
  if (!s.input.empty()) {
    if (s.input == "-") {
      sources.push_back(file_source(in));
    } else {
      file = std::make_unique<std::ifstream>(s.input);
      if (!*file) throw Error(Errc::ParseError, "cannot open " + s.input);
      sources.push_back(file_source(*file));
    }
  }
  for (const auto& spec : s.gens) sources.push_back(generator_source(spec));
  if (sources.empty()) throw Error(Errc::InvalidParameter, "corpus needs an input file or --gen");

  CorpusOptions opts;
  opts.mode = parse_mode(s.mode);
  opts.max_exact = s.max_exact;
  opts.oracle.max_order = s.max_oracle;
  opts.jobs = std::max(1u, s.jobs);
  opts.timings = s.timings;
  opts.sk_all = s.sk_all;

  std::unique_ptr<std::ofstream> jsonl_file;
  std::ostream* jsonl = &out;
  if (s.out_path) {
    jsonl_file = std::make_unique<std::ofstream>(*s.out_path, std::ios::binary);
    if (!*jsonl_file) throw Error(Errc::InvalidParameter, "cannot write " + *s.out_path);
    jsonl = jsonl_file.get();
  }
  const CorpusSummary summary = run_corpus(concat_sources(std::move(sources)), opts, *jsonl, err);
  jsonl->flush();

  if (s.summary_path) {
    std::ofstream csv(*s.summary_path, std::ios::binary);
    if (!csv) throw Error(Errc::InvalidParameter, "cannot write " + *s.summary_path);
    write_summary_csv(summary, csv);
  } else {
    write_summary_csv(summary, s.out_path ? out : err);
  }

  for (const auto& g6 : summary.violations) err << "violation: " << g6 << '\n';
  if (!summary.partition2_twin_free_failures.empty()) {
    err << "*** " << summary.partition2_twin_free_failures.size()
        << " twin-free graph(s) admit no partition into two locating sets ***\n";
  }
  if (summary.total_violations() > 0) return kBoundViolation;
  if (summary.parse_failures > 0) return kParseError;
  if (summary.errors > 0) return kFailure;
  return kOk;
}

int cmd_gen(const Settings& s, std::ostream& out) {
  if (s.kind == "labeled") {
    all_labeled_graphs(s.order, [&](const Graph& g) { out << encode_graph6(g) << '\n'; });
    return kOk;
  }
  const auto kind = parse_graph_kind(s.kind);
  if (!kind) throw Error(Errc::InvalidParameter, "unknown graph kind '" + s.kind + "'");
  const std::uint64_t count = *kind == GraphKind::Gnp ? s.count : 1;
  for (std::uint64_t i = 0; i < count; ++i) out << encode_graph6(generate(*kind, s.order, s.p, s.seed + i)) << '\n';
  return kOk;
}

int cmd_convert(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(s.input, in);
  if (s.to == "graph6") {
    out << encode_graph6(g) << '\n';
  } else if (s.to == "edges") {
    out << format_edge_list(g);
  } else {
    throw Error(Errc::InvalidParameter, "unknown target format '" + s.to + "'");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locating-dominating set workbench for twin-free graphs", "locdom"};
  app.require_subcommand(1);
  Settings s;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "graph6 string, file (graph6 or edge list), or - for stdin")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", s.mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
    sub->add_option("--max-exact", s.max_exact, "exact S-search ceiling (env LOCDOM_MAX_EXACT)");
    sub->add_option("--max-oracle", s.max_oracle, "ceiling for the exact L/LD oracles");
    sub->add_option("--jobs", s.jobs, "worker threads");
    sub->add_option("--seed", s.heuristic_seed, "seed for the heuristic random start");
    sub->add_flag("--json", s.json, "print the JSON report");
  };

  auto* check = app.add_subcommand("check", "twin scan and basic statistics");
  add_input(check);
  check->add_flag("--json", s.json, "print the JSON report");

  auto* bound = app.add_subcommand("bound", "construct the 5n/8 locating(-dominating) witness");
  add_input(bound);
  add_common(bound);

  auto* solve = app.add_subcommand("solve", "exact L(G) and LD(G)");
  add_input(solve);
  add_common(solve);

  auto* part = app.add_subcommand("partition2", "search a partition into two locating sets");
  add_input(part);
  add_common(part);

  auto* sk = app.add_subcommand("sk", "maximum separation over k-partitions");
  add_input(sk);
  sk->add_option("k", s.k, "number of blocks")->required();
  add_common(sk);

  auto* corpus = app.add_subcommand("corpus", "sweep a corpus, JSON lines out, CSV summary");
  corpus->add_option("input", s.input, "file of graph6 lines (or -)");
  corpus->add_option("--gen", s.gens, "generator spec, e.g. labeled:6 or gnp:10:0.5:1:100");
  corpus->add_option("--out", s.out_path, "JSON-lines output path (default stdout)");
  corpus->add_option("--summary", s.summary_path, "CSV summary path");
  corpus->add_flag("--timings", s.timings, "include per-phase timings in records");
  corpus->add_flag("--sk", s.sk_all, "record s_k(G) for every k (n <= 10)");
  corpus->add_option("--mode", s.mode, "exact or heuristic")->check(CLI::IsMember({"exact", "heuristic"}));
  corpus->add_option("--max-exact", s.max_exact, "exact S-search ceiling (env LOCDOM_MAX_EXACT)");
  corpus->add_option("--max-oracle", s.max_oracle, "ceiling for the exact L/LD oracles");
  corpus->add_option("--jobs", s.jobs, "worker threads");

  auto* gen = app.add_subcommand("gen", "write generated graphs as graph6 lines");
  gen->add_option("kind", s.kind, "path, cycle, complete, gnp or labeled")->required();
  gen->add_option("-n,--order", s.order, "vertex count")->required();
  gen->add_option("-p", s.p, "edge probability (gnp)");
  gen->add_option("--seed", s.seed, "first gnp seed");
  gen->add_option("--count", s.count, "number of gnp graphs (seeds seed, seed+1, ...)");

  auto* convert = app.add_subcommand("convert", "convert between graph6 and edge list");
  add_input(convert);
  convert->add_option("--to", s.to, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*check) return cmd_check(s, in, out);
    if (*bound) return cmd_bound(s, in, out);
    if (*solve) return cmd_solve(s, in, out);
    if (*part) return cmd_partition2(s, in, out);
    if (*sk) return cmd_sk(s, in, out);
    if (*corpus) return cmd_corpus(s, in, out, err);
    if (*gen) return cmd_gen(s, out);
    if (*convert) return cmd_convert(s, in, out);
  } catch (const Error& e) {
    err << "locdom: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kFailure;
}

}  // namespace locdom::cli
