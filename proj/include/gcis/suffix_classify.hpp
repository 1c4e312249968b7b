#pragma once

// L/S/LMS classification, induced sorting of LMS-substrings and naming.
// Positions are 0-based throughout; factor ends are inclusive.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcis/text.hpp"

namespace gcis {

struct TypeMap {
  std::vector<bool> is_s;
  std::vector<std::size_t> lms;  // ascending

  bool is_lms(std::size_t i) const { return i > 0 && is_s[i] && !is_s[i - 1]; }
};

struct FactorOccurrence {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive

  std::size_t length() const { return end - start + 1; }
  bool operator==(const FactorOccurrence&) const = default;
};

// Front-coded rule: the right-hand side is the first `lcp` symbols of the
// previous rule's right-hand side followed by `tail`.
struct Rule {
  std::size_t lcp = 0;
  std::vector<Symbol> tail;

  bool operator==(const Rule&) const = default;
};

// Front-coded rules in name order, held as flat lcp / tail streams.
class RuleList {
 public:
  RuleList() { tail_offsets_.push_back(0); }

  static RuleList from(const std::vector<Rule>& rules);
  std::vector<Rule> to_vector() const;

  void push_back(std::size_t lcp, std::span<const Symbol> tail);
  void reserve(std::size_t rules, std::size_t tail_symbols);

  std::size_t size() const { return lcps_.size(); }
  bool empty() const { return lcps_.empty(); }
  std::size_t lcp(std::size_t i) const { return static_cast<std::size_t>(lcps_[i]); }
  std::size_t tail_length(std::size_t i) const { return tail_offsets_[i + 1] - tail_offsets_[i]; }
  std::span<const Symbol> tail(std::size_t i) const {
    return std::span<const Symbol>(tails_).subspan(tail_offsets_[i], tail_length(i));
  }
  Rule operator[](std::size_t i) const {
    const auto t = tail(i);
    return {lcp(i), {t.begin(), t.end()}};
  }

  const std::vector<std::uint64_t>& lcps() const { return lcps_; }
  std::vector<std::uint64_t> tail_lengths() const;
  const std::vector<Symbol>& tails() const { return tails_; }

  bool operator==(const RuleList&) const = default;

 private:
  std::vector<std::uint64_t> lcps_;
  std::vector<std::size_t> tail_offsets_;
  std::vector<Symbol> tails_;
};

struct NamingResult {
  std::vector<Symbol> names;        // text order, values in [1, sigma]
  std::size_t sigma = 0;
  RuleList sorted_rules;            // name order
  std::size_t prefix_len = 0;       // symbols before the first LMS position
};

TypeMap classify_types(const Text& t);

// LMS-substrings in text order; the last one is always [n-1, n-1].
std::vector<FactorOccurrence> factorize(const Text& t, const TypeMap& m);

// Returns factor indices in LMS-substring order (symbol first, then type with
// L < S). Equal factors are adjacent but their relative order is unspecified.
std::vector<std::size_t> sort_lms(const Text& t, const TypeMap& m,
                                  std::span<const FactorOccurrence> factors);

NamingResult name_factors(const Text& t,
                          std::span<const FactorOccurrence> factors,
                          std::span<const std::size_t> sorted);

}  // namespace gcis
