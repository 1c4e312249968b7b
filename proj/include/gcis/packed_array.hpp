#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gcis/error.hpp"

namespace gcis {

// Fixed-width integers packed contiguously into little-endian 64-bit words.
class PackedIntArray {
 public:
  PackedIntArray() = default;
  PackedIntArray(unsigned width, std::size_t count);
  // Adopts an existing word buffer; throws CorruptArchive on a size mismatch.
  PackedIntArray(unsigned width, std::size_t count, std::vector<std::uint64_t> words);

  unsigned width() const { return width_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::uint64_t get(std::size_t i) const {
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    std::uint64_t v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return v & mask_;
  }

  // Caller guarantees value < 2^width.
  void set(std::size_t i, std::uint64_t value) {
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    words_[w] = (words_[w] & ~(mask_ << off)) | (value << off);
    if (off + width_ > 64) {
      const unsigned spill = 64 - off;
      words_[w + 1] = (words_[w + 1] & ~(mask_ >> spill)) | (value >> spill);
    }
  }

  static std::size_t words_for(unsigned width, std::size_t count) {
    return (static_cast<std::size_t>(width) * count + 63) / 64;
  }

  bool operator==(const PackedIntArray&) const = default;

 private:
  unsigned width_ = 1;
  std::size_t count_ = 0;
  std::uint64_t mask_ = 1;
  std::vector<std::uint64_t> words_;
};

template <std::unsigned_integral T>
PackedIntArray pack_fixed(std::span<const T> values, unsigned width) {
  PackedIntArray out(width, values.size());
  const std::uint64_t limit = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<std::uint64_t>(values[i]) > limit)
      throw RangeError("pack_fixed: value does not fit in " + std::to_string(width) + " bits");
    out.set(i, values[i]);
  }
  return out;
}

template <std::unsigned_integral T>
PackedIntArray pack_fixed(const std::vector<T>& values, unsigned width) {
  return pack_fixed(std::span<const T>(values), width);
}

std::vector<std::uint64_t> unpack_fixed(const PackedIntArray& arr);

}  // namespace gcis
