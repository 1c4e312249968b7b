#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gcis {

// Append-only bit sequence with select1 support. Call build_select() after
// the last push_back.
class BitVector {
 public:
  void push_back(bool bit);
  void append_zeros(std::size_t count);
  void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }

  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t size() const { return size_; }
  std::size_t count_ones() const { return ones_; }

  void build_select();

  // Position of the k-th set bit, k in [1, count_ones()].
  std::size_t select1(std::size_t k) const;

  // Number of set bits in [0, i).
  std::size_t rank1(std::size_t i) const;

  std::size_t size_in_bits() const;

 private:
  static constexpr std::size_t kSampleRate = 64;

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  // Word index holding the (s * kSampleRate + 1)-th one, and the number of
  // ones in all words before it.
  std::vector<std::size_t> sample_word_;
  std::vector<std::size_t> sample_rank_;
};

// Rule boundaries: body i contributes len(i) zeros followed by a one, so the
// bitmap has total_length + count bits.
class BoundaryIndex {
 public:
  BoundaryIndex() = default;
  explicit BoundaryIndex(BitVector bits);

  template <typename Lengths>
  static BoundaryIndex from_lengths(const Lengths& lengths) {
    BitVector bits;
    for (auto len : lengths) {
      bits.append_zeros(static_cast<std::size_t>(len));
      bits.push_back(true);
    }
    return BoundaryIndex(std::move(bits));
  }

  std::size_t count() const { return bits_.count_ones(); }
  std::size_t total_length() const { return bits_.size() - bits_.count_ones(); }

  // Body k (0-based): offset into the concatenated bodies and its length.
  std::size_t start(std::size_t k) const {
    return k == 0 ? 0 : bits_.select1(k) + 1 - k;
  }
  std::size_t length(std::size_t k) const {
    const std::size_t end = bits_.select1(k + 1);
    const std::size_t begin = k == 0 ? 0 : bits_.select1(k) + 1;
    return end - begin;
  }

  struct Span {
    std::size_t start;
    std::size_t length;
  };

  // start(k) and length(k) from two select queries.
  Span locate(std::size_t k) const {
    const std::size_t begin = k == 0 ? 0 : bits_.select1(k) + 1;
    const std::size_t end = bits_.select1(k + 1);
    return {begin - k, end - begin};
  }

  const BitVector& bits() const { return bits_; }

 private:
  BitVector bits_;
};

}  // namespace gcis
