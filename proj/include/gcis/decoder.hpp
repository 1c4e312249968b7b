#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcis/bit_vector.hpp"
#include "gcis/grammar.hpp"
#include "gcis/packed_array.hpp"

namespace gcis {

enum class Execution { serial, parallel };

// All rule bodies of one level in a single packed array, with O(1) access to
// body k through two select queries on the boundary bitmap.
struct ExpandedDictionary {
  PackedIntArray bodies;
  BoundaryIndex boundaries;

  std::size_t sigma() const { return boundaries.count(); }
};

// Throws CorruptArchive when an lcp exceeds the previous body.
ExpandedDictionary expand_rules(const LevelDictionary& d);

// Rewrites a level-j text into its level-(j-1) text. `reduced` names must lie
// in [1, sigma]; throws CorruptArchive otherwise.
Text expand_level(const ExpandedDictionary& ed, std::span<const Symbol> prefix_rule,
                  const Text& reduced, std::uint64_t output_alphabet_size,
                  Execution exec = Execution::parallel);

// Work counters for one decompression, summed over levels.
struct DecodeStats {
  std::size_t body_symbols = 0;    // symbols materialized by expand_rules
  std::size_t output_symbols = 0;  // symbols written by expand_level
  std::size_t select_queries = 0;
};

// Expands final_text through every level back to the level-0 text.
Text expand_grammar(const Grammar& g, Execution exec = Execution::parallel,
                    DecodeStats* stats = nullptr);

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> archive,
                                     Execution exec = Execution::parallel);

}  // namespace gcis
