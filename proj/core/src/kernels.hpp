#pragma once

// Word-sized kernels for graphs of order <= 64. Each vertex set is a
// uint64_t mask; rows[v] is N(v).

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace locdom::kernel {

using Mask = std::uint64_t;
using Rows = std::span<const Mask>;

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Gathers traces rows[v] & x for v in y into buf, sorted; returns count.
inline std::size_t sorted_traces(Rows rows, Mask x, Mask y, std::array<Mask, 64>& buf) {
  std::size_t len = 0;
  while (y != 0) {
    const int v = std::countr_zero(y);
    y &= y - 1;
    const Mask t = rows[v] & x;
    std::size_t i = len++;
    while (i > 0 && buf[i - 1] > t) {
      buf[i] = buf[i - 1];
      --i;
    }
    buf[i] = t;
  }
  return len;
}

// Number of distinct traces of y under x.
inline std::size_t count_classes(Rows rows, Mask x, Mask y) {
  std::array<Mask, 64> buf;
  const std::size_t len = sorted_traces(rows, x, y, buf);
  if (len == 0) return 0;
  std::size_t classes = 1;
  for (std::size_t i = 1; i < len; ++i) classes += buf[i] != buf[i - 1];
  return classes;
}

// Number of classes of size >= 2.
inline std::size_t count_nontrivial(Rows rows, Mask x, Mask y) {
  std::array<Mask, 64> buf;
  const std::size_t len = sorted_traces(rows, x, y, buf);
  std::size_t out = 0;
  for (std::size_t i = 0; i < len;) {
    std::size_t j = i + 1;
    while (j < len && buf[j] == buf[i]) ++j;
    out += (j - i) >= 2;
    i = j;
  }
  return out;
}

inline std::size_t score(Rows rows, Mask a, Mask all) { return count_classes(rows, a, all & ~a); }

inline bool is_locating(Rows rows, Mask x, Mask all) {
  const Mask rest = all & ~x;
  return count_classes(rows, x, rest) == static_cast<std::size_t>(std::popcount(rest));
}

inline bool is_dominating(Rows rows, Mask x, Mask all) {
  for (Mask rest = all & ~x; rest != 0; rest &= rest - 1) {
    if ((rows[std::countr_zero(rest)] & x) == 0) return false;
  }
  return true;
}

// Minimum-index representative of each class of the x-partition of y.
inline Mask representatives(Rows rows, Mask x, Mask y) {
  std::array<Mask, 64> seen;
  std::size_t len = 0;
  Mask out = 0;
  while (y != 0) {
    const int v = std::countr_zero(y);
    y &= y - 1;
    const Mask t = rows[v] & x;
    if (std::find(seen.begin(), seen.begin() + len, t) == seen.begin() + len) {
      seen[len++] = t;
      out |= Mask{1} << v;
    }
  }
  return out;
}

}  // namespace locdom::kernel
