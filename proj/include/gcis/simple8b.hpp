#pragma once

// Simple8b: 64-bit words holding a 4-bit selector (low bits) and a 60-bit
// payload of equal-width items, least significant item first.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gcis::s8b {

struct Arrangement {
  unsigned width;
  unsigned group_size;
};

inline constexpr std::array<Arrangement, 16> kArrangements{{
    {0, 240}, {0, 120}, {1, 60}, {2, 30}, {3, 20}, {4, 15}, {5, 12}, {6, 10},
    {7, 8},   {8, 7},   {10, 6}, {12, 5}, {15, 4}, {20, 3}, {30, 2}, {60, 1},
}};

inline constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 60) - 1;

inline unsigned selector_of(std::uint64_t word) { return word & 0xF; }

// Greedy packing. Throws UnencodableValue for values above kMaxValue.
std::vector<std::uint64_t> encode(std::span<const std::uint64_t> values);

// Produces exactly `count` values. Throws TruncatedArchive when the words run
// out and CorruptArchive when words remain unused.
std::vector<std::uint64_t> decode(std::span<const std::uint64_t> words,
                                  std::size_t count);

}  // namespace gcis::s8b
