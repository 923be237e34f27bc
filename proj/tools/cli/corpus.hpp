#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/bound.hpp"
#include "locdom/exact.hpp"

namespace locdom::cli {

struct CorpusItem {
  std::size_t line = 0;  // 1-based position in the source
  std::string text;      // graph6
};

// Returns items until exhausted.
using CorpusSource = std::function<std::optional<CorpusItem>()>;

// graph6 lines; blank lines and '#' comments are skipped but still
// counted for line numbers. `in` must outlive the source.
CorpusSource file_source(std::istream& in);

// Generator specs:
//   labeled:N | labeled:A-B       all labeled graphs of order 1..N or A..B
//   gnp:N:P:SEED:COUNT            COUNT graphs, seeds SEED, SEED+1, ...
//   path:N | cycle:N | complete:N
// Throws Error(InvalidParameter) on a bad spec.
CorpusSource generator_source(std::string_view spec);

CorpusSource concat_sources(std::vector<CorpusSource> sources);

struct CorpusOptions {
  Mode mode = Mode::Exact;
  std::size_t max_exact = 20;
  OracleLimits oracle{16};
  std::size_t partition_limit = 20;
  std::size_t sk_limit = 10;
  unsigned jobs = 1;
  bool timings = false;
  bool sk_all = false;
  std::size_t batch = 4096;
};

struct OrderSummary {
  std::size_t graphs = 0;
  std::size_t twin_free = 0;
  std::size_t max_ld = 0;
  std::size_t certified = 0;
  std::size_t bound_violations = 0;
  std::size_t no_partition2 = 0;
  std::size_t no_partition2_twin_free = 0;
  std::size_t ld_half_n_holds = 0;
  std::size_t ld_half_n_fails = 0;
};

struct CorpusSummary {
  std::map<std::size_t, OrderSummary> per_order;
  std::size_t parse_failures = 0;
  std::size_t errors = 0;
  std::vector<std::string> violations;             // offending graph6 strings
  std::vector<std::string> partition2_twin_free_failures;  // twin-free graphs without a two-locating partition

  std::size_t total_violations() const;
};

// One JSON line per item, in source order regardless of `jobs`. Parse
// failures become {"line","input","error"} records and a diagnostic on
// `diag`; processing continues.
CorpusSummary run_corpus(const CorpusSource& source, const CorpusOptions& opts, std::ostream& jsonl,
                         std::ostream& diag);

// Columns: n,graphs,twin_free,max_ld,certified,bound_violations,
// no_partition2,no_partition2_twin_free,ld_half_n_holds,ld_half_n_fails
void write_summary_csv(const CorpusSummary& summary, std::ostream& out);

}  // namespace locdom::cli
