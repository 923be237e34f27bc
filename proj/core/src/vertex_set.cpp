#include "locdom/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

std::size_t word_count(std::size_t capacity) { return (capacity + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t capacity) : capacity_(capacity), words_(word_count(capacity), 0) {}

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
    : VertexSet(capacity) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (capacity % 64 != 0) s.words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t capacity, std::uint64_t mask) {
  VertexSet s(capacity);
  if (!s.words_.empty()) {
    if (capacity < 64) mask &= (std::uint64_t{1} << capacity) - 1;
    s.words_[0] = mask;
  }
  return s;
}

VertexSet VertexSet::from_vector(std::size_t capacity, std::span<const Vertex> members) {
  VertexSet s(capacity);
  for (Vertex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= capacity_) {
    throw Error(Errc::DomainViolation,
                "vertex " + std::to_string(v) + " outside set of capacity " + std::to_string(capacity_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < capacity_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(capacity_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

std::optional<Vertex> VertexSet::min() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& rhs) {
  check_same(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= rhs.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& rhs) {
  check_same(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= rhs.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& rhs) {
  check_same(rhs);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~rhs.words_[w];
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& rhs) const {
  if (auto c = capacity_ <=> rhs.capacity_; c != 0) return c;
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (auto c = words_[w] <=> rhs.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

void VertexSet::check_same(const VertexSet& rhs) const {
  if (capacity_ != rhs.capacity_) {
    throw Error(Errc::DomainViolation, "vertex sets of capacity " + std::to_string(capacity_) +
                                           " and " + std::to_string(rhs.capacity_) + " mixed");
  }
}

}  // namespace locdom

std::size_t std::hash<locdom::VertexSet>::operator()(const locdom::VertexSet& s) const noexcept {
  std::size_t h = s.capacity() * 0x9E3779B97F4A7C15ULL;
  for (auto w : s.words()) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}
