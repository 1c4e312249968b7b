#include "gcis/suffix_classify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "gcis/error.hpp"

namespace gcis {
namespace {

using Index = std::uint32_t;
constexpr Index kEmpty = std::numeric_limits<Index>::max();

// Bucket boundaries per symbol: heads[c] is the first slot of bucket c,
// tails[c] one past its last slot.
struct Buckets {
  std::vector<Index> heads;
  std::vector<Index> tails;
};

Buckets count_buckets(const Text& t) {
  const std::size_t k = static_cast<std::size_t>(t.alphabet_size);
  std::vector<Index> counts(k, 0);
  for (Symbol s : t.symbols) ++counts[s];
  Buckets b{std::vector<Index>(k), std::vector<Index>(k)};
  Index sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    b.heads[c] = sum;
    sum += counts[c];
    b.tails[c] = sum;
  }
  return b;
}

bool same_factor(const Text& t, const FactorOccurrence& a, const FactorOccurrence& b) {
  if (a.length() != b.length()) return false;
  return std::equal(t.symbols.begin() + a.start, t.symbols.begin() + a.end + 1,
                    t.symbols.begin() + b.start);
}

}  // namespace

RuleList RuleList::from(const std::vector<Rule>& rules) {
  RuleList out;
  for (const Rule& r : rules) out.push_back(r.lcp, r.tail);
  return out;
}

std::vector<Rule> RuleList::to_vector() const {
  std::vector<Rule> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

void RuleList::push_back(std::size_t lcp, std::span<const Symbol> tail) {
  lcps_.push_back(lcp);
  tails_.insert(tails_.end(), tail.begin(), tail.end());
  tail_offsets_.push_back(tails_.size());
}

void RuleList::reserve(std::size_t rules, std::size_t tail_symbols) {
  lcps_.reserve(rules);
  tail_offsets_.reserve(rules + 1);
  tails_.reserve(tail_symbols);
}

std::vector<std::uint64_t> RuleList::tail_lengths() const {
  std::vector<std::uint64_t> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = tail_length(i);
  return out;
}

TypeMap classify_types(const Text& t) {
  const std::size_t n = t.size();
  TypeMap m;
  m.is_s.assign(n, false);
  m.is_s[n - 1] = true;
  for (std::size_t i = n - 1; i-- > 0;) {
    m.is_s[i] = t[i] < t[i + 1] || (t[i] == t[i + 1] && m.is_s[i + 1]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (m.is_s[i] && !m.is_s[i - 1]) m.lms.push_back(i);
  }
  return m;
}

std::vector<FactorOccurrence> factorize(const Text& t, const TypeMap& m) {
  std::vector<FactorOccurrence> factors;
  if (m.lms.empty()) {
    // Sentinel-only text: the sentinel is its own (final) factor.
    factors.push_back({t.size() - 1, t.size() - 1});
    return factors;
  }
  factors.reserve(m.lms.size());
  for (std::size_t k = 0; k + 1 < m.lms.size(); ++k) factors.push_back({m.lms[k], m.lms[k + 1]});
  factors.push_back({m.lms.back(), t.size() - 1});
  return factors;
}

std::vector<std::size_t> sort_lms(const Text& t, const TypeMap& m,
                                  std::span<const FactorOccurrence> factors) {
  const std::size_t n = t.size();
  if (factors.size() <= 1) return std::vector<std::size_t>(factors.size(), 0);
  if (n >= kEmpty) throw RangeError("sort_lms: text too long for 32-bit positions");

  Buckets b = count_buckets(t);
  std::vector<Index> sa(n, kEmpty);

  // LMS positions go to the tails of their buckets, scanning right to left.
  std::vector<Index> tails = b.tails;
  for (std::size_t k = factors.size(); k-- > 0;) {
    const std::size_t p = factors[k].start;
    sa[--tails[t[p]]] = static_cast<Index>(p);
  }

  // L-type predecessors at bucket heads, left to right.
  std::vector<Index> heads = b.heads;
  for (std::size_t i = 0; i < n; ++i) {
    const Index j = sa[i];
    if (j != kEmpty && j > 0 && !m.is_s[j - 1]) sa[heads[t[j - 1]]++] = j - 1;
  }

  // S-type predecessors at bucket tails, right to left.
  tails = b.tails;
  for (std::size_t i = n; i-- > 0;) {
    const Index j = sa[i];
    if (j != kEmpty && j > 0 && m.is_s[j - 1]) sa[--tails[t[j - 1]]] = j - 1;
  }

  // Compact the sorted LMS positions into sa[0, count). LMS positions are never
  // adjacent, so sa[count + p / 2] is a free slot to map position p to its factor.
  const std::size_t count = factors.size();
  std::size_t filled = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Index p = sa[i];
    if (p != kEmpty && m.is_lms(p)) sa[filled++] = p;
  }
  std::fill(sa.begin() + static_cast<std::ptrdiff_t>(count), sa.end(), kEmpty);
  for (std::size_t k = 0; k < count; ++k) sa[count + factors[k].start / 2] = static_cast<Index>(k);

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = sa[count + sa[i] / 2];
  return order;
}

NamingResult name_factors(const Text& t, std::span<const FactorOccurrence> factors,
                          std::span<const std::size_t> sorted) {
  NamingResult r;
  r.names.assign(factors.size(), 0);
  r.sorted_rules.reserve(factors.size(), t.size());
  r.prefix_len = factors.empty() ? t.size() - 1 : factors.front().start;

  const FactorOccurrence* prev = nullptr;
  Symbol name = 0;
  for (std::size_t k : sorted) {
    const FactorOccurrence& f = factors[k];
    if (prev == nullptr || !same_factor(t, *prev, f)) {
      ++name;
      // Right-hand side drops the closing LMS symbol: T[start, end - 1].
      const auto body = t.symbols.begin() + f.start;
      const std::size_t len = f.end - f.start;
      std::size_t lcp = 0;
      if (prev != nullptr) {
        const auto prev_body = t.symbols.begin() + prev->start;
        const std::size_t limit = std::min(len, prev->end - prev->start);
        while (lcp < limit && prev_body[lcp] == body[lcp]) ++lcp;
      }
      r.sorted_rules.push_back(lcp, std::span<const Symbol>(&*(body + lcp), len - lcp));
    }
    r.names[k] = name;
    prev = &f;
  }
  r.sigma = name;
  return r;
}

}  // namespace gcis
