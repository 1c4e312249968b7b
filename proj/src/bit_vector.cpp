#include "gcis/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace gcis {

void BitVector::push_back(bool bit) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (bit) {
    words_.back() |= std::uint64_t{1} << (size_ & 63);
    ++ones_;
  }
  ++size_;
}

void BitVector::append_zeros(std::size_t count) {
  size_ += count;
  words_.resize((size_ + 63) / 64, 0);
}

void BitVector::build_select() {
  sample_word_.clear();
  sample_rank_.clear();
  std::size_t ones = 0;
  std::size_t next = 1;  // rank of the next sampled one
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::size_t here = static_cast<std::size_t>(std::popcount(words_[w]));
    while (next <= ones + here) {
      sample_word_.push_back(w);
      sample_rank_.push_back(ones);
      next += kSampleRate;
    }
    ones += here;
  }
}

std::size_t BitVector::select1(std::size_t k) const {
  if (k == 0 || k > ones_) throw std::out_of_range("select1: rank out of range");
  const std::size_t s = (k - 1) / kSampleRate;
  std::size_t w = sample_word_[s];
  std::size_t ones = sample_rank_[s];
  for (;;) {
    const std::size_t here = static_cast<std::size_t>(std::popcount(words_[w]));
    if (ones + here >= k) break;
    ones += here;
    ++w;
  }
  std::uint64_t x = words_[w];
  for (std::size_t r = k - ones - 1; r > 0; --r) x &= x - 1;
  return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
}

std::size_t BitVector::rank1(std::size_t i) const {
  std::size_t ones = 0;
  const std::size_t full = i / 64;
  for (std::size_t w = 0; w < full; ++w) ones += static_cast<std::size_t>(std::popcount(words_[w]));
  if (i & 63) ones += static_cast<std::size_t>(std::popcount(words_[full] & ((std::uint64_t{1} << (i & 63)) - 1)));
  return ones;
}

std::size_t BitVector::size_in_bits() const {
  return words_.size() * 64 + (sample_word_.size() + sample_rank_.size()) * 64;
}

BoundaryIndex::BoundaryIndex(BitVector bits) : bits_(std::move(bits)) { bits_.build_select(); }

}  // namespace gcis
