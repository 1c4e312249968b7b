#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gcis/suffix_classify.hpp"
#include "gcis/text.hpp"

namespace gcis {

// Rules of one recursion level, sorted by name. Rule i (0-based) defines the
// level-local name i + 1; prefix_rule covers the symbols before the first
// LMS-substring.
struct LevelDictionary {
  std::uint32_t level = 1;
  std::size_t sigma = 0;
  RuleList rules;
  std::vector<Symbol> prefix_rule;
  std::uint64_t rhs_alphabet_size = kByteAlphabetSize;

  bool operator==(const LevelDictionary&) const = default;
};

// levels[0] rewrites the original text; final_text is the most reduced string.
struct Grammar {
  std::vector<LevelDictionary> levels;
  Text final_text;
  std::uint64_t original_len = 0;

  bool operator==(const Grammar&) const = default;
};

struct ReduceResult {
  LevelDictionary dictionary;
  Text reduced;
};

ReduceResult reduce_once(const Text& t);

// Per-level figures reported while building, including discarded levels.
struct LevelReport {
  std::uint32_t level = 0;
  std::size_t input_len = 0;    // n^j, sentinel included
  std::size_t reduced_len = 0;  // sentinel included
  std::size_t sigma = 0;
  std::size_t lcp_sum = 0;
  std::size_t tail_sum = 0;
  std::size_t dictionary_bytes = 0;
  bool kept = false;
};

struct BuildOptions {
  std::optional<std::size_t> max_levels;
  bool greedy_stop = true;
  std::function<void(const LevelReport&)> on_level;
};

Grammar build_grammar(const Text& t, const BuildOptions& options = {});

// Global nonterminal id of level-local name v at level j (1-based).
// Throws RangeError when v is not in [1, sigma^j].
std::uint64_t naming_offset(std::span<const LevelDictionary> levels,
                            std::size_t j, std::uint64_t v);

}  // namespace gcis
