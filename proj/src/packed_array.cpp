#include "gcis/packed_array.hpp"

#include <string>

namespace gcis {

PackedIntArray::PackedIntArray(unsigned width, std::size_t count)
    : width_(width), count_(count) {
  if (width == 0 || width > 64) throw RangeError("packed array width must be in [1, 64]");
  mask_ = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  words_.assign(words_for(width, count), 0);
}

PackedIntArray::PackedIntArray(unsigned width, std::size_t count, std::vector<std::uint64_t> words)
    : PackedIntArray(width, 0) {
  if (words.size() != words_for(width, count))
    throw CorruptArchive("packed array: expected " + std::to_string(words_for(width, count)) +
                         " words, got " + std::to_string(words.size()));
  count_ = count;
  words_ = std::move(words);
}

std::vector<std::uint64_t> unpack_fixed(const PackedIntArray& arr) {
  std::vector<std::uint64_t> out(arr.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = arr.get(i);
  return out;
}

}  // namespace gcis
