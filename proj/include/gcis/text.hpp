#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis {

// Symbols are alphabet ranks; 0 is reserved for the sentinel.
using Symbol = std::uint32_t;

inline constexpr Symbol kSentinel = 0;
inline constexpr std::uint64_t kByteAlphabetSize = 257;

// An integer-alphabet string terminated by a unique sentinel. Level 0 is the
// original input; level j > 0 holds the names produced by recursion level j.
struct Text {
  std::vector<Symbol> symbols{kSentinel};
  std::uint64_t alphabet_size = 1;
  std::uint32_t level = 0;

  std::size_t size() const { return symbols.size(); }
  // Length without the sentinel.
  std::size_t body_size() const { return symbols.size() - 1; }
  Symbol operator[](std::size_t i) const { return symbols[i]; }

  bool operator==(const Text&) const = default;
};

Text from_bytes(std::span<const std::uint8_t> data);

// Inverse of from_bytes. Throws MalformedText on a level > 0 text, a misplaced
// sentinel, or a symbol outside [1, 256].
std::vector<std::uint8_t> to_bytes(const Text& t);

// Checks every Text invariant; throws MalformedText.
void validate(const Text& t);

// Bits needed to store any symbol of an alphabet of the given size.
unsigned symbol_width(std::uint64_t alphabet_size);

}  // namespace gcis
