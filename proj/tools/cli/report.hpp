#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "locdom/bound.hpp"
#include "locdom/exact.hpp"
#include "locdom/graph.hpp"
#include "locdom/twins.hpp"

namespace locdom::cli {

struct RunReport {
  std::string graph_id;  // graph6
  std::size_t n = 0;
  std::size_t m = 0;
  bool twin_free = false;
  std::optional<std::vector<TwinPair>> twins;
  std::optional<BoundReport> bound;
  std::optional<OptimumWitness> l_exact;
  std::optional<OptimumWitness> ld_exact;
  std::optional<std::size_t> s_value;
  std::optional<std::size_t> k;
  std::optional<PartitionWitness> partition2;
  std::optional<SkResult> sk;
  std::optional<std::vector<std::size_t>> sk_values;  // s_1..s_n
  std::optional<std::string> skipped;                 // why a phase did not run
  std::vector<std::pair<std::string, double>> timings_ms;
};

// Basic fields plus twin-freeness.
RunReport base_report(const Graph& g);

struct Phases {
  bool twins = false;
  bool bound = false;
  Mode mode = Mode::Exact;
  ConstructOptions construct;
  bool solve = false;
  OracleLimits oracle;
  bool partition2 = false;
  std::optional<std::size_t> sk;  // one k
  bool sk_all = false;            // every k in 1..n
  bool timings = true;
};

// Runs the requested phases, recording each phase's wall time.
// Library errors propagate.
RunReport analyze(const Graph& g, const Phases& phases);

// Every witness is re-verified against `g` first; a failed check raises
// Error(AssertionFailure).
nlohmann::ordered_json to_json(const Graph& g, const RunReport& r, bool with_timings);

std::string render_text(const RunReport& r);

nlohmann::ordered_json set_json(const VertexSet& s);

}  // namespace locdom::cli
