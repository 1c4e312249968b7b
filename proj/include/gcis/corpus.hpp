#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gcis::corpus {

inline constexpr std::size_t kDefaultCap = std::size_t{1} << 30;

// Fibonacci word: S1 = "a", S2 = "ab", Sk = S(k-1) S(k-2). Throws RangeError
// when k < 1 or the result would exceed `cap` bytes.
std::vector<std::uint8_t> fibonacci(unsigned k, std::size_t cap = kDefaultCap);

// Thue-Morse prefix: 'a' where popcount(i) is even, 'b' otherwise.
std::vector<std::uint8_t> thue_morse(std::size_t n);

// n bytes drawn uniformly from [0, sigma) with std::mt19937_64(seed).
// Byte = engine() % sigma. sigma in [1, 256].
std::vector<std::uint8_t> random(std::size_t n, unsigned sigma, std::uint64_t seed);

// `pattern` repeated until n bytes.
std::vector<std::uint8_t> periodic(std::size_t n, const std::string& pattern);

}  // namespace gcis::corpus
