#include "simdim/vertex_set.hpp"

#include <algorithm>

namespace simdim {

VertexSet::VertexSet(std::size_t universe_size,
                     std::initializer_list<std::size_t> members)
    : VertexSet(universe_size) {
  for (auto m : members) set(m);
}

VertexSet VertexSet::full(std::size_t universe_size) {
  VertexSet s(universe_size);
  for (auto& w : s.words_) w = ~Word{0};
  if (const auto tail = universe_size % kWordBits; tail != 0)
    s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::from_indices(std::size_t universe_size,
                                  const std::vector<std::size_t>& members) {
  VertexSet s(universe_size);
  for (auto m : members) s.set(m);
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::size_t VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::size_t VertexSet::next(std::size_t i) const noexcept {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i / kWordBits;
  Word bits = words_[w] & (~Word{0} << (i % kWordBits));
  while (true) {
    if (bits != 0)
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(size_) - *this; }

bool lexicographic_less(const VertexSet& a, const VertexSet& b) {
  std::size_t i = a.first();
  std::size_t j = b.first();
  const std::size_t end_a = a.universe_size();
  const std::size_t end_b = b.universe_size();
  while (i != end_a && j != end_b) {
    if (i != j) return i < j;
    i = a.next(i);
    j = b.next(j);
  }
  return i == end_a && j != end_b;
}

void sort_lexicographic(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lexicographic_less);
}

}  // namespace simdim
