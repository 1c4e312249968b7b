#include "gcis/grammar.hpp"

#include <stdexcept>
#include <string>

#include "gcis/archive.hpp"
#include "gcis/error.hpp"
#include "gcis/log.hpp"

namespace gcis {
namespace {

std::size_t bit_cost(const Text& t) {
  return t.body_size() * symbol_width(t.alphabet_size);
}

// Reduction and stream bounds every level must satisfy; a violation means the
// factorization itself is broken.
void check_level_bounds(const LevelReport& r) {
  if (r.reduced_len > (r.input_len + 1) / 2 + 1)
    throw std::logic_error("level " + std::to_string(r.level) + ": reduced string longer than half the input");
  if (r.lcp_sum > r.input_len || r.tail_sum > r.input_len)
    throw std::logic_error("level " + std::to_string(r.level) + ": L/S stream sum exceeds input length");
}

}  // namespace

ReduceResult reduce_once(const Text& t) {
  const TypeMap types = classify_types(t);
  const std::vector<FactorOccurrence> factors = factorize(t, types);
  const std::vector<std::size_t> order = sort_lms(t, types, factors);
  NamingResult named = name_factors(t, factors, order);

  ReduceResult out;
  LevelDictionary& d = out.dictionary;
  d.level = t.level + 1;
  d.sigma = named.sigma;
  d.rules = std::move(named.sorted_rules);
  d.prefix_rule.assign(t.symbols.begin(), t.symbols.begin() + named.prefix_len);
  d.rhs_alphabet_size = t.alphabet_size;

  Text& reduced = out.reduced;
  reduced.symbols = std::move(named.names);
  reduced.symbols.push_back(kSentinel);
  reduced.alphabet_size = named.sigma + 1;
  reduced.level = t.level + 1;
  return out;
}

Grammar build_grammar(const Text& t, const BuildOptions& options) {
  Grammar g;
  g.original_len = t.body_size();
  // Level 0 is read in place; later levels own their reduced text.
  const Text* current = &t;
  Text owned;

  while (!options.max_levels || g.levels.size() < *options.max_levels) {
    ReduceResult step = reduce_once(*current);
    const LevelDictionary& d = step.dictionary;

    LevelReport report;
    report.level = d.level;
    report.input_len = current->size();
    report.reduced_len = step.reduced.size();
    report.sigma = d.sigma;
    for (std::uint64_t l : d.rules.lcps()) report.lcp_sum += l;
    report.tail_sum = d.rules.tails().size();
    report.dictionary_bytes = encoded_level_size(d);
    check_level_bounds(report);

    const bool all_distinct = d.sigma == step.reduced.body_size();
    bool keep = true;
    if (!all_distinct && options.greedy_stop) {
      const std::size_t new_cost = report.dictionary_bytes * 8 + bit_cost(step.reduced);
      keep = new_cost < bit_cost(*current);
    }
    report.kept = keep;
    if (options.on_level) options.on_level(report);
    log::debug("level " + std::to_string(report.level) + ": n=" + std::to_string(report.input_len) +
               " sigma=" + std::to_string(report.sigma) + " dict=" + std::to_string(report.dictionary_bytes) +
               "B" + (keep ? "" : " (discarded)"));
    if (!keep) break;

    g.levels.push_back(std::move(step.dictionary));
    owned = std::move(step.reduced);
    current = &owned;
    if (all_distinct) break;
  }
  g.final_text = current == &owned ? std::move(owned) : t;
  return g;
}

std::uint64_t naming_offset(std::span<const LevelDictionary> levels, std::size_t j,
                            std::uint64_t v) {
  if (j == 0 || j > levels.size())
    throw RangeError("naming_offset: level " + std::to_string(j) + " does not exist");
  if (v == 0 || v > levels[j - 1].sigma)
    throw RangeError("naming_offset: name " + std::to_string(v) + " outside [1, sigma]");
  std::uint64_t offset = 0;
  for (std::size_t k = 0; k + 1 < j; ++k) offset += levels[k].sigma;
  return v + offset;
}

}  // namespace gcis
