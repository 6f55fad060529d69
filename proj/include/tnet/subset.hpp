#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "tnet/error.hpp"

namespace tnet {

using Index = std::uint32_t;

// A membership mask over vertices 0..width-1.
//
// The width is fixed when the subset is created; binary operations require
// operands of equal width. The cardinality is cached and kept in sync by every
// mutating member.
class VertexSubset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSubset() = default;
  explicit VertexSubset(std::size_t width)
      : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

  static VertexSubset from_indices(std::size_t width, std::span<const Index> idx) {
    VertexSubset s(width);
    for (Index i : idx) {
      require(i < width, ErrorCode::BadInput,
              "vertex index " + std::to_string(i) + " out of range " + std::to_string(width));
      s.set(i);
    }
    return s;
  }
  static VertexSubset from_indices(std::size_t width, std::initializer_list<Index> idx) {
    return from_indices(width, std::span<const Index>(idx.begin(), idx.size()));
  }
  static VertexSubset full(std::size_t width) {
    VertexSubset s(width);
    for (std::size_t i = 0; i < width; ++i) s.set(static_cast<Index>(i));
    return s;
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t card() const noexcept { return card_; }
  bool empty() const noexcept { return card_ == 0; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(Index i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  void set(Index i) noexcept {
    Word& w = words_[i / kWordBits];
    const Word bit = Word{1} << (i % kWordBits);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }
  void reset(Index i) noexcept {
    Word& w = words_[i / kWordBits];
    const Word bit = Word{1} << (i % kWordBits);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  bool is_subset_of(const VertexSubset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const VertexSubset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }
  std::size_t intersection_card(const VertexSubset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }

  VertexSubset& operator&=(const VertexSubset& o) noexcept { return combine(o, [](Word a, Word b) { return a & b; }); }
  VertexSubset& operator|=(const VertexSubset& o) noexcept { return combine(o, [](Word a, Word b) { return a | b; }); }
  VertexSubset& operator^=(const VertexSubset& o) noexcept { return combine(o, [](Word a, Word b) { return a ^ b; }); }
  VertexSubset& operator-=(const VertexSubset& o) noexcept { return combine(o, [](Word a, Word b) { return a & ~b; }); }

  friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) { return a &= b; }
  friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
  friend VertexSubset operator^(VertexSubset a, const VertexSubset& b) { return a ^= b; }
  friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

  // Complement within 0..width-1.
  VertexSubset complement() const {
    VertexSubset c = VertexSubset::full(width_);
    return c -= *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Index>(k * kWordBits + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(card_);
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) noexcept {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

  // Lexicographic order on the ascending index sequences.
  friend bool lex_less(const VertexSubset& a, const VertexSubset& b) {
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  }

  // Total order on masks (word-wise); only for containers, not for tie-breaks.
  friend bool operator<(const VertexSubset& a, const VertexSubset& b) noexcept {
    if (a.width_ != b.width_) return a.width_ < b.width_;
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = width_ * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ (w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return h;
  }

 private:
  template <typename Op>
  VertexSubset& combine(const VertexSubset& o, Op op) noexcept {
    card_ = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      words_[k] = op(words_[k], o.words_[k]);
      card_ += std::popcount(words_[k]);
    }
    return *this;
  }

  std::size_t width_ = 0;
  std::size_t card_ = 0;
  std::vector<Word> words_;
};

struct SubsetHash {
  std::size_t operator()(const VertexSubset& s) const noexcept { return s.hash(); }
};

// Binomial coefficient, saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

// Advance `comb` (strictly increasing positions into a pool of size n) to the
// next k-combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<Index>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Calls f(std::span<const Index>) for every k-subset of {0..n-1} in
// lexicographic order. f may return bool; returning false stops the walk.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<Index> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<Index>(i);
  do {
    if constexpr (std::is_same_v<std::invoke_result_t<F, std::span<const Index>>, bool>) {
      if (!f(std::span<const Index>(comb))) return;
    } else {
      f(std::span<const Index>(comb));
    }
  } while (next_combination(comb, n));
}

}  // namespace tnet

template <>
struct std::hash<tnet::VertexSubset> {
  std::size_t operator()(const tnet::VertexSubset& s) const noexcept { return s.hash(); }
};
