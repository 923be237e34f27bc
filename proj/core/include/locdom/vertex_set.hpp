#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace locdom {

using Vertex = std::uint32_t;

// Bit-packed subset of {0, ..., capacity-1}. Bits at positions >= capacity
// are always zero. Binary operations require equal capacities.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t capacity);
  // Low 64 vertices taken from `mask`; bits beyond capacity are dropped.
  static VertexSet from_mask(std::size_t capacity, std::uint64_t mask);
  static VertexSet from_vector(std::size_t capacity, std::span<const Vertex> members);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < capacity_ && (words_[v >> 6] >> (v & 63) & 1u);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  std::optional<Vertex> min() const noexcept;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  // Membership of vertices 0..63 as a mask; valid for any capacity.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  VertexSet& operator&=(const VertexSet& rhs);
  VertexSet& operator|=(const VertexSet& rhs);
  VertexSet& operator-=(const VertexSet& rhs);
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by the numeric value of the membership bit pattern (vertex
  // capacity-1 most significant); sets of different capacity order by
  // capacity first.
  std::strong_ordering operator<=>(const VertexSet& rhs) const;

  std::string to_string() const;  // "{0,2,5}"

 private:
  void check_same(const VertexSet& rhs) const;

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace locdom

template <>
struct std::hash<locdom::VertexSet> {
  std::size_t operator()(const locdom::VertexSet& s) const noexcept;
};
