#include "gcis/text.hpp"

#include <bit>
#include <string>

#include "gcis/error.hpp"

namespace gcis {

Text from_bytes(std::span<const std::uint8_t> data) {
  Text t;
  t.symbols.resize(data.size() + 1);
  for (std::size_t i = 0; i < data.size(); ++i) t.symbols[i] = Symbol{data[i]} + 1;
  t.symbols.back() = kSentinel;
  t.alphabet_size = kByteAlphabetSize;
  t.level = 0;
  return t;
}

std::vector<std::uint8_t> to_bytes(const Text& t) {
  if (t.level != 0) throw MalformedText("to_bytes: text is not at level 0");
  if (t.symbols.empty() || t.symbols.back() != kSentinel)
    throw MalformedText("to_bytes: missing sentinel");
  std::vector<std::uint8_t> out(t.body_size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Symbol s = t.symbols[i];
    if (s == kSentinel || s > 256)
      throw MalformedText("to_bytes: invalid symbol " + std::to_string(s) + " at " + std::to_string(i));
    out[i] = static_cast<std::uint8_t>(s - 1);
  }
  return out;
}

void validate(const Text& t) {
  if (t.symbols.empty()) throw MalformedText("text is empty (no sentinel)");
  if (t.alphabet_size == 0) throw MalformedText("alphabet size is zero");
  if (t.symbols.back() != kSentinel) throw MalformedText("text does not end with the sentinel");
  for (std::size_t i = 0; i + 1 < t.symbols.size(); ++i) {
    if (t.symbols[i] == kSentinel)
      throw MalformedText("sentinel at non-final position " + std::to_string(i));
    if (t.symbols[i] >= t.alphabet_size)
      throw MalformedText("symbol " + std::to_string(t.symbols[i]) + " outside alphabet");
  }
}

unsigned symbol_width(std::uint64_t alphabet_size) {
  if (alphabet_size <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(alphabet_size - 1));
}

}  // namespace gcis
