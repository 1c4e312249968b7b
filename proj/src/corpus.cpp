#include "gcis/corpus.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "gcis/error.hpp"

namespace gcis::corpus {

std::vector<std::uint8_t> fibonacci(unsigned k, std::size_t cap) {
  if (k < 1) throw RangeError("fibonacci: k must be >= 1");
  // |S_k| = F(k+1) with F(1) = F(2) = 1.
  std::size_t prev = 1, len = 1;
  for (unsigned i = 1; i < k; ++i) {
    const std::size_t next = len + prev;
    if (next > cap) throw RangeError("fibonacci: S_" + std::to_string(k) + " exceeds the size cap");
    prev = len;
    len = next;
  }

  // Build S_k in place: S_i = S_(i-1) S_(i-2) and S_(i-2) is a prefix of S_(i-1).
  std::vector<std::uint8_t> s{'a'};
  if (k == 1) return s;
  s = {'a', 'b'};
  std::size_t shorter = 1;
  s.reserve(len);
  for (unsigned i = 3; i <= k; ++i) {
    const std::size_t current = s.size();
    s.resize(current + shorter);
    std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(shorter), s.begin() + static_cast<std::ptrdiff_t>(current));
    shorter = current;
  }
  return s;
}

std::vector<std::uint8_t> thue_morse(std::size_t n) {
  std::vector<std::uint8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (std::popcount(i) & 1) ? 'b' : 'a';
  return s;
}

std::vector<std::uint8_t> random(std::size_t n, unsigned sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 256) throw RangeError("random: sigma must be in [1, 256]");
  std::mt19937_64 engine(seed);
  std::vector<std::uint8_t> s(n);
  for (auto& b : s) b = static_cast<std::uint8_t>(engine() % sigma);
  return s;
}

std::vector<std::uint8_t> periodic(std::size_t n, const std::string& pattern) {
  if (pattern.empty()) throw RangeError("periodic: empty pattern");
  std::vector<std::uint8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>(pattern[i % pattern.size()]);
  return s;
}

}  // namespace gcis::corpus
