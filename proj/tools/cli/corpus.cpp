#include "cli/corpus.hpp"

#include <atomic>
#include <memory>
#include <charconv>
#include <string>
#include <thread>

#include "cli/report.hpp"
#include "locdom/errors.hpp"
#include "locdom/generate.hpp"
#include "locdom/graph6.hpp"

namespace locdom::cli {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw Error(Errc::InvalidParameter, "generator spec '" + std::string(spec) + "': " + why);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

template <class T>
T number(std::string_view spec, std::string_view tok) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) bad_spec(spec, "'" + std::string(tok) + "' is not a number");
  return value;
}

struct Outcome {
  std::string line;
  bool parsed = false;
  bool error = false;
  std::size_t n = 0;
  bool twin_free = false;
  std::optional<std::size_t> ld;
  bool certified = false;
  bool violation = false;
  std::optional<bool> partition2_found;
  std::optional<bool> ld_half_n;
  std::string graph6;
};

Outcome process(const CorpusItem& item, const CorpusOptions& opts) {
  Outcome out;
  Graph g;
  try {
    g = decode_graph6(item.text);
  } catch (const Error& e) {
    out.line = json{{"line", item.line}, {"input", item.text}, {"error", e.what()}}.dump();
    return out;
  }
  out.parsed = true;
  out.n = g.order();

  Phases phases;
  phases.timings = opts.timings;
  phases.oracle = opts.oracle;
  phases.construct.exact.max_order = opts.max_exact;
  phases.construct.exact.workers = 1;
  RunReport r = base_report(g);
  out.twin_free = r.twin_free;
  out.graph6 = r.graph_id;
  std::vector<std::string> violations;
  try {
    phases.bound = r.twin_free && g.order() > 0;
    phases.mode = opts.mode;
    if (phases.bound && opts.mode == Mode::Exact && g.order() > opts.max_exact) {
      phases.mode = Mode::Heuristic;
      r.skipped = "exact S search above ceiling; heuristic used";
    }
    phases.solve = g.order() <= opts.oracle.max_order;
    phases.partition2 = g.order() <= opts.partition_limit;
    phases.sk_all = opts.sk_all && g.order() <= opts.sk_limit;
    const auto skipped = r.skipped;
    r = analyze(g, phases);
    r.skipped = skipped;
  } catch (const Error& e) {
    out.error = true;
    if (e.code() == Errc::AssertionFailure) {
      out.violation = true;
      violations.push_back(e.what());
    }
    json rec = {{"graph", r.graph_id}, {"n", r.n}, {"twin_free", r.twin_free}};
    rec["error"] = e.what();
    if (!violations.empty()) rec["violations"] = violations;
    out.line = rec.dump();
    return out;
  }

  const std::size_t n = g.order();
  if (r.bound && n > 0) {
    const BoundReport& b = *r.bound;
    out.certified = b.certified;
    out.ld = b.ld_witness.size();
    if (b.mode == Mode::Exact && !b.certified) violations.push_back("exact witness above bound");
    if (r.l_exact && r.l_exact->size > b.witness.size()) violations.push_back("L(G) above construct witness");
    if (r.ld_exact && r.ld_exact->size > b.ld_witness.size()) violations.push_back("LD(G) above LD witness");
  }
  if (r.l_exact && r.ld_exact) {
    out.ld = r.ld_exact->size;
    if (r.ld_exact->size > r.l_exact->size + 1) violations.push_back("LD(G) > L(G)+1");
    if (r.twin_free && static_cast<std::int64_t>(r.ld_exact->size) > ld_bound(n)) {
      violations.push_back("LD(G) above ceil(5n/8)");
    }
    if (r.twin_free) out.ld_half_n = 2 * r.ld_exact->size <= n;
  }
  if (r.partition2) out.partition2_found = r.partition2->found;

  json rec;
  try {
    rec = to_json(g, r, opts.timings);
  } catch (const Error& e) {
    out.error = true;
    violations.push_back(e.what());
    rec = {{"graph", r.graph_id}, {"n", n}, {"error", e.what()}};
  }
  if (out.ld_half_n) rec["ld_at_most_half_n"] = *out.ld_half_n;
  if (!violations.empty()) {
    out.violation = true;
    rec["violations"] = violations;
  }
  out.line = rec.dump();
  return out;
}

}  // namespace

std::size_t CorpusSummary::total_violations() const {
  std::size_t total = 0;
  for (const auto& [n, s] : per_order) total += s.bound_violations;
  return total;
}

CorpusSource file_source(std::istream& in) {
  auto line_no = std::make_shared<std::size_t>(0);
  return [&in, line_no]() -> std::optional<CorpusItem> {
    std::string line;
    while (std::getline(in, line)) {
      ++*line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      return CorpusItem{*line_no, std::move(line)};
    }
    return std::nullopt;
  };
}

CorpusSource generator_source(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  if (kind == "labeled") {
    if (parts.size() != 2) bad_spec(spec, "expected labeled:N or labeled:A-B");
    const auto range = split(parts[1], '-');
    std::size_t lo = 1;
    std::size_t hi = 0;
    if (range.size() == 1) {
      hi = number<std::size_t>(spec, range[0]);
    } else if (range.size() == 2) {
      lo = number<std::size_t>(spec, range[0]);
      hi = number<std::size_t>(spec, range[1]);
    } else {
      bad_spec(spec, "bad order range");
    }
    if (hi > kMaxLabeledOrder) bad_spec(spec, "labeled orders above " + std::to_string(kMaxLabeledOrder));
    struct State {
      std::size_t n, hi, line = 0;
      std::uint64_t index = 0;
    };
    auto st = std::make_shared<State>(State{lo, hi});
    return [st]() -> std::optional<CorpusItem> {
      while (st->n <= st->hi && st->index >= labeled_graph_count(st->n)) {
        ++st->n;
        st->index = 0;
      }
      if (st->n > st->hi) return std::nullopt;
      return CorpusItem{++st->line, encode_graph6(labeled_graph(st->n, st->index++))};
    };
  }
  if (kind == "gnp") {
    if (parts.size() != 5) bad_spec(spec, "expected gnp:N:P:SEED:COUNT");
    const auto n = number<std::size_t>(spec, parts[1]);
    const auto p = number<double>(spec, parts[2]);
    const auto seed = number<std::uint64_t>(spec, parts[3]);
    const auto count = number<std::uint64_t>(spec, parts[4]);
    if (!(p >= 0.0 && p <= 1.0)) bad_spec(spec, "p outside [0,1]");
    auto i = std::make_shared<std::uint64_t>(0);
    return [=]() -> std::optional<CorpusItem> {
      if (*i >= count) return std::nullopt;
      const std::uint64_t at = (*i)++;
      return CorpusItem{static_cast<std::size_t>(at + 1), encode_graph6(generate(GraphKind::Gnp, n, p, seed + at))};
    };
  }
  if (auto gk = parse_graph_kind(kind); gk && *gk != GraphKind::Gnp) {
    if (parts.size() != 2) bad_spec(spec, "expected " + std::string(kind) + ":N");
    auto pending = std::make_shared<std::optional<CorpusItem>>(
        CorpusItem{1, encode_graph6(generate(*gk, number<std::size_t>(spec, parts[1])))});
    return [pending]() {
      auto out = std::move(*pending);
      pending->reset();
      return out;
    };
  }
  bad_spec(spec, "unknown generator");
}

CorpusSource concat_sources(std::vector<CorpusSource> sources) {
  auto state = std::make_shared<std::pair<std::vector<CorpusSource>, std::size_t>>(std::move(sources), 0);
  auto offset = std::make_shared<std::size_t>(0);
  auto last = std::make_shared<std::size_t>(0);
  return [state, offset, last]() -> std::optional<CorpusItem> {
    auto& [list, at] = *state;
    while (at < list.size()) {
      if (auto item = list[at]()) {
        *last = item->line;
        item->line += *offset;
        return item;
      }
      *offset += *last;
      *last = 0;
      ++at;
    }
    return std::nullopt;
  };
}

CorpusSummary run_corpus(const CorpusSource& source, const CorpusOptions& opts, std::ostream& jsonl,
                         std::ostream& diag) {
  CorpusSummary summary;
  const unsigned jobs = std::max(1u, opts.jobs);
  const std::size_t batch = std::max<std::size_t>(1, opts.batch);
  std::vector<CorpusItem> items;
  std::vector<Outcome> outcomes;

  for (bool done = false; !done;) {
    items.clear();
    while (items.size() < batch) {
      auto item = source();
      if (!item) {
        done = true;
        break;
      }
      items.push_back(std::move(*item));
    }
    if (items.empty()) break;

    outcomes.assign(items.size(), Outcome{});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) outcomes[i] = process(items[i], opts);
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < items.size(); ++i) {
      const Outcome& o = outcomes[i];
      jsonl << o.line << '\n';
      if (!o.parsed) {
        ++summary.parse_failures;
        diag << "line " << items[i].line << ": malformed graph6 '" << items[i].text << "'\n";
        continue;
      }
      OrderSummary& s = summary.per_order[o.n];
      ++s.graphs;
      s.twin_free += o.twin_free;
      s.certified += o.certified;
      if (o.ld) s.max_ld = std::max(s.max_ld, *o.ld);
      if (o.error) ++summary.errors;
      if (o.violation) {
        ++s.bound_violations;
        summary.violations.push_back(o.graph6);
        diag << "BOUND VIOLATION line " << items[i].line << ": " << o.graph6 << '\n';
      }
      if (o.partition2_found && !*o.partition2_found) {
        ++s.no_partition2;
        if (o.twin_free) {
          ++s.no_partition2_twin_free;
          summary.partition2_twin_free_failures.push_back(o.graph6);
          diag << "NOTE twin-free graph without a two-locating partition: " << o.graph6 << '\n';
        }
      }
      if (o.ld_half_n) ++(*o.ld_half_n ? s.ld_half_n_holds : s.ld_half_n_fails);
    }
  }
  return summary;
}

void write_summary_csv(const CorpusSummary& summary, std::ostream& out) {
  out << "n,graphs,twin_free,max_ld,certified,bound_violations,no_partition2,no_partition2_twin_free,"
         "ld_half_n_holds,ld_half_n_fails\n";
  for (const auto& [n, s] : summary.per_order) {
    out << n << ',' << s.graphs << ',' << s.twin_free << ',' << s.max_ld << ',' << s.certified << ','
        << s.bound_violations << ',' << s.no_partition2 << ',' << s.no_partition2_twin_free << ','
        << s.ld_half_n_holds << ',' << s.ld_half_n_fails << '\n';
  }
}

}  // namespace locdom::cli
