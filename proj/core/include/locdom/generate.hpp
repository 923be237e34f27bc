#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

// SplitMix64 (Steele, Lea, Flood 2014). State advances by
// 0x9E3779B97F4A7C15; output mixes with
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^ (z >> 31)
// Pinned so gnp corpora reproduce bit-identically anywhere.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Top 53 bits scaled into [0, 1).
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next(); }

 private:
  std::uint64_t state_;
};

enum class GraphKind { Path, Cycle, Complete, Gnp };

std::optional<GraphKind> parse_graph_kind(std::string_view name);

// gnp draws one next_unit() per vertex pair in graph6 bit order
// (0,1),(0,2),(1,2),(0,3),... and keeps the edge when the draw is < p.
// Throws Error(InvalidParameter) for p outside [0,1] or missing for gnp.
Graph generate(GraphKind kind, std::size_t n, std::optional<double> p = std::nullopt,
               std::uint64_t seed = 0);

inline constexpr std::size_t kMaxLabeledOrder = 7;

// Calls `sink` for each of the 2^(n(n-1)/2) labeled graphs on n vertices,
// in increasing order of the graph6 triangle bit pattern (pair index i of
// the (0,1),(0,2),(1,2),... order is bit i of the counter). Throws
// Error(RefusedScale) when n > kMaxLabeledOrder unless allow_large.
void all_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& sink,
                        bool allow_large = false);

// Graph number `index` of the stream above; lets callers split the range.
Graph labeled_graph(std::size_t n, std::uint64_t index);

std::uint64_t labeled_graph_count(std::size_t n);

}  // namespace locdom
