#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace simdim {

/// Subset of a vertex universe of fixed size, stored as 64-bit words.
/// Bits at positions >= size() are always zero.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size)
      : size_(universe_size), words_(word_count(universe_size), 0) {}
  VertexSet(std::size_t universe_size, std::initializer_list<std::size_t> members);

  static VertexSet full(std::size_t universe_size);
  static VertexSet from_indices(std::size_t universe_size,
                                const std::vector<std::size_t>& members);

  std::size_t universe_size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  VertexSet& set(std::size_t i) noexcept {
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    return *this;
  }
  VertexSet& reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    return *this;
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;

  /// Index of the lowest member, or universe_size() when empty.
  std::size_t first() const noexcept;
  /// Lowest member strictly greater than i, or universe_size().
  std::size_t next(std::size_t i) const noexcept;

  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator^=(const VertexSet& other) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  static std::size_t word_count(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Orders sets by their ascending member lists, shorter prefix first.
/// This is the order used for every reported list of subsets.
bool lexicographic_less(const VertexSet& a, const VertexSet& b);

void sort_lexicographic(std::vector<VertexSet>& sets);

}  // namespace simdim
