#include "gcis/decoder.hpp"

#include <string>

#include "gcis/archive.hpp"
#include "gcis/error.hpp"
#include "gcis/kernels.hpp"

namespace gcis {

ExpandedDictionary expand_rules(const LevelDictionary& d) {
  std::vector<std::size_t> lengths(d.rules.size());
  std::size_t total = 0;
  for (std::size_t k = 0; k < d.rules.size(); ++k) {
    const std::size_t prev_len = k == 0 ? 0 : lengths[k - 1];
    if (d.rules.lcp(k) > prev_len)
      throw CorruptArchive("level " + std::to_string(d.level) + ": lcp of rule " + std::to_string(k + 1) +
                           " exceeds the previous body");
    lengths[k] = d.rules.lcp(k) + d.rules.tail_length(k);
    total += lengths[k];
  }

  ExpandedDictionary ed;
  ed.bodies = PackedIntArray(symbol_width(d.rhs_alphabet_size), total);
  std::size_t prev_start = 0;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < d.rules.size(); ++k) {
    const std::size_t start = pos;
    for (std::size_t i = 0; i < d.rules.lcp(k); ++i) ed.bodies.set(pos++, ed.bodies.get(prev_start + i));
    for (Symbol s : d.rules.tail(k)) ed.bodies.set(pos++, s);
    prev_start = start;
  }
  ed.boundaries = BoundaryIndex::from_lengths(lengths);
  return ed;
}

Text expand_level(const ExpandedDictionary& ed, std::span<const Symbol> prefix_rule,
                  const Text& reduced, std::uint64_t output_alphabet_size, Execution exec) {
  if (reduced.symbols.empty() || reduced.symbols.back() != kSentinel)
    throw CorruptArchive("reduced text is missing its sentinel");
  const std::span<const Symbol> names(reduced.symbols.data(), reduced.body_size());
  const std::size_t sigma = ed.sigma();
  for (Symbol v : names) {
    if (v == kSentinel || v > sigma)
      throw CorruptArchive("name " + std::to_string(v) + " outside [1, " + std::to_string(sigma) + "]");
  }

  Text out;
  if (exec == Execution::parallel)
    kernels::expand_parallel(ed, prefix_rule, names, out.symbols);
  else
    kernels::expand_serial(ed, prefix_rule, names, out.symbols);
  out.symbols.push_back(kSentinel);
  out.alphabet_size = output_alphabet_size;
  out.level = reduced.level == 0 ? 0 : reduced.level - 1;
  return out;
}

Text expand_grammar(const Grammar& g, Execution exec, DecodeStats* stats) {
  Text current = g.final_text;
  for (std::size_t j = g.levels.size(); j-- > 0;) {
    const LevelDictionary& d = g.levels[j];
    const ExpandedDictionary ed = expand_rules(d);
    Text next = expand_level(ed, d.prefix_rule, current, d.rhs_alphabet_size, exec);
    if (stats != nullptr) {
      stats->body_symbols += ed.bodies.size();
      stats->output_symbols += next.size();
      stats->select_queries += 2 * current.body_size();
    }
    current = std::move(next);
  }
  return current;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> archive, Execution exec) {
  const Grammar g = deserialize(archive);
  const Text t = expand_grammar(g, exec);
  if (t.body_size() != g.original_len)
    throw CorruptArchive("decoded length " + std::to_string(t.body_size()) + " differs from header length " +
                         std::to_string(g.original_len));
  try {
    return to_bytes(t);
  } catch (const MalformedText& e) {
    throw CorruptArchive(e.what());
  }
}

}  // namespace gcis
