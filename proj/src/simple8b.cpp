#include "gcis/simple8b.hpp"

#include <algorithm>
#include <string>

#include "gcis/error.hpp"

namespace gcis::s8b {
namespace {

std::size_t zero_run(std::span<const std::uint64_t> values, std::size_t from, std::size_t limit) {
  std::size_t i = from;
  const std::size_t end = std::min(values.size(), from + limit);
  while (i < end && values[i] == 0) ++i;
  return i - from;
}

}  // namespace

std::vector<std::uint64_t> encode(std::span<const std::uint64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > kMaxValue)
      throw UnencodableValue("simple8b: value at index " + std::to_string(i) + " needs more than 60 bits");
  }

  std::vector<std::uint64_t> words;
  std::size_t pos = 0;
  while (pos < values.size()) {
    const std::size_t zeros = zero_run(values, pos, 240);
    if (zeros == 240) {
      words.push_back(0);
      pos += 240;
      continue;
    }
    if (zeros >= 120) {
      words.push_back(1);
      pos += 120;
      continue;
    }

    const std::size_t remaining = values.size() - pos;
    for (unsigned sel = 2; sel < kArrangements.size(); ++sel) {
      const auto [width, group] = kArrangements[sel];
      const std::size_t take = std::min<std::size_t>(group, remaining);
      const std::uint64_t limit = (std::uint64_t{1} << width) - 1;
      bool fits = true;
      for (std::size_t k = 0; k < take && fits; ++k) fits = values[pos + k] <= limit;
      if (!fits) continue;

      std::uint64_t word = sel;
      for (std::size_t k = 0; k < take; ++k) word |= values[pos + k] << (4 + k * width);
      words.push_back(word);
      pos += take;
      break;
    }
  }
  return words;
}

std::vector<std::uint64_t> decode(std::span<const std::uint64_t> words, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::size_t w = 0;
  while (out.size() < count) {
    if (w == words.size())
      throw TruncatedArchive("simple8b: stream ends after " + std::to_string(out.size()) + " of " +
                             std::to_string(count) + " values");
    const std::uint64_t word = words[w++];
    const auto [width, group] = kArrangements[selector_of(word)];
    const std::size_t take = std::min<std::size_t>(group, count - out.size());
    if (width == 0) {
      out.insert(out.end(), take, 0);
      continue;
    }
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    for (std::size_t k = 0; k < take; ++k) out.push_back((word >> (4 + k * width)) & mask);
  }
  if (w != words.size())
    throw CorruptArchive("simple8b: " + std::to_string(words.size() - w) + " unused trailing words");
  return out;
}

}  // namespace gcis::s8b
