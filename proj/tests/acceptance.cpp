// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcis/compressor.hpp"
#include "gcis/corpus.hpp"
#include "gcis/error.hpp"
#include "gcis/simple8b.hpp"
#include "oracle/oracle.hpp"

namespace {

using namespace gcis;
using Bytes = std::vector<std::uint8_t>;

// Aggregated per-level observations from every compression in the suite.
struct LevelAudit {
  std::size_t levels_seen = 0;
  std::size_t reduction_violations = 0;
  std::size_t stream_violations = 0;
  std::string first_violation;

  void observe(const LevelReport& r) {
    ++levels_seen;
    if (r.reduced_len > (r.input_len + 1) / 2 + 1) {
      ++reduction_violations;
      if (first_violation.empty())
        first_violation = "reduction at level " + std::to_string(r.level) + ": " + std::to_string(r.input_len) +
                          " -> " + std::to_string(r.reduced_len);
    }
    if (r.lcp_sum > r.input_len || r.tail_sum > r.input_len) {
      ++stream_violations;
      if (first_violation.empty()) first_violation = "stream sum at level " + std::to_string(r.level);
    }
  }
};

LevelAudit audit;

BuildOptions audited(bool greedy = true) {
  BuildOptions o;
  o.greedy_stop = greedy;
  o.on_level = [](const LevelReport& r) { audit.observe(r); };
  return o;
}

// Σ L and Σ S of every level decoded back out of an archive, against the
// length of that level's input text.
bool archive_stream_bounds_hold(const Bytes& archive) {
  const Grammar g = deserialize(archive);
  Text current = g.final_text;
  for (std::size_t j = g.levels.size(); j-- > 0;) {
    const LevelDictionary& d = g.levels[j];
    Text below = expand_level(expand_rules(d), d.prefix_rule, current, d.rhs_alphabet_size);
    std::size_t lsum = 0, ssum = 0;
    for (std::size_t i = 0; i < d.rules.size(); ++i) {
      lsum += d.rules.lcp(i);
      ssum += d.rules.tail_length(i);
    }
    if (lsum > below.size() || ssum > below.size()) return false;
    current = std::move(below);
  }
  return true;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), seconds,
              o.detail.empty() ? "" : " | ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

void run(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, name, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

template <typename F>
void for_each_string(unsigned k, std::size_t max_len, F&& f) {
  Bytes s;
  for (std::size_t len = 0; len <= max_len; ++len) {
    s.assign(len, 1);
    for (;;) {
      f(s);
      std::size_t i = 0;
      while (i < len && s[i] == k) s[i++] = 1;
      if (i == len) break;
      ++s[i];
    }
  }
}

std::vector<Bytes> random_regimen() {
  std::mt19937_64 rng(20240601);
  std::vector<Bytes> out;
  out.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    const unsigned sigma = 1 + static_cast<unsigned>(rng() % 256);
    Bytes b(rng() % 4097);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng() % sigma);
    out.push_back(std::move(b));
  }
  return out;
}

Text symbol_text(const Bytes& s) {
  Text t;
  t.symbols.assign(s.begin(), s.end());
  t.symbols.push_back(kSentinel);
  t.alphabet_size = 4;
  t.level = 1;
  return t;
}

std::vector<std::vector<Symbol>> sorted_contents(const Text& t, const std::vector<FactorOccurrence>& f,
                                                 const std::vector<std::size_t>& order) {
  std::vector<std::vector<Symbol>> out;
  for (std::size_t k : order) out.emplace_back(t.symbols.begin() + f[k].start, t.symbols.begin() + f[k].end + 1);
  return out;
}

double ratio(std::size_t archive, std::size_t input) { return 100.0 * archive / input; }

std::string fmt(double v, int prec = 3) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(prec);
  os << v;
  return os.str();
}

Outcome lossless() {
  std::size_t cases = 0;
  auto check = [&](const Bytes& x, bool greedy) {
    ++cases;
    const Bytes archive = compress(x, audited(greedy));
    if (decompress(archive) != x) throw std::runtime_error("roundtrip mismatch on a " + std::to_string(x.size()) + "-byte input");
    if (!archive_stream_bounds_hold(archive)) throw std::runtime_error("decoded L/S stream exceeds level length");
  };

  for_each_string(3, 10, [&](const Bytes& s) {
    check(s, true);
    check(s, false);
  });
  const auto regimen = random_regimen();
  for (std::size_t i = 0; i < regimen.size(); ++i) {
    check(regimen[i], i % 2 == 0);
    // Codec-free reference expansion on the first 10^3.
    if (i < 1000 && oracle::naive_expand(build_grammar(from_bytes(regimen[i]))) != regimen[i])
      throw std::runtime_error("naive expansion disagrees");
  }

  const std::size_t mib8 = std::size_t{8} << 20;
  std::vector<Bytes> large{corpus::fibonacci(20), corpus::fibonacci(27), corpus::fibonacci(33),
                           corpus::thue_morse(1 << 16), corpus::thue_morse(mib8),
                           corpus::periodic(100000, "abcabd"), corpus::periodic(mib8, "the quick brown fox ")};
  for (const Bytes& x : large) check(x, true);
  check(corpus::fibonacci(27), false);
  return {true, std::to_string(cases) + " inputs roundtrip exactly"};
}

Outcome oracle_equivalence() {
  std::size_t cases = 0;
  auto check = [&](const Text& t) {
    ++cases;
    const TypeMap m = classify_types(t);
    const TypeMap naive = oracle::naive_classify(t);
    if (m.is_s != naive.is_s || m.lms != naive.lms) throw std::runtime_error("classify_types disagrees");
    const auto f = factorize(t, m);
    if (sorted_contents(t, f, sort_lms(t, m, f)) != sorted_contents(t, f, oracle::naive_lms_order(t, f)))
      throw std::runtime_error("sort_lms disagrees");
  };
  for_each_string(3, 10, [&](const Bytes& s) { check(symbol_text(s)); });
  for (const Bytes& b : random_regimen()) check(from_bytes(b));
  return {true, std::to_string(cases) + " texts agree"};
}

Outcome effectiveness() {
  const Bytes fib = corpus::fibonacci(30);
  const Bytes tm = corpus::thue_morse(1 << 20);
  const Bytes rnd = corpus::random(1 << 20, 256, 1);
  const Bytes a_fib = compress(fib, audited());
  const Bytes a_tm = compress(tm, audited());
  const Bytes a_rnd = compress(rnd, audited());
  if (decompress(a_fib) != fib || decompress(a_tm) != tm || decompress(a_rnd) != rnd)
    return {false, "roundtrip failure"};
  const double r_fib = ratio(a_fib.size(), fib.size());
  const double r_tm = ratio(a_tm.size(), tm.size());
  const double r_rnd = ratio(a_rnd.size(), rnd.size());
  const bool pass = r_fib <= 1.0 && r_tm <= 2.0 && r_rnd >= 50.0 && r_rnd <= 115.0;
  return {pass, "fib30 " + fmt(r_fib) + "% (<= 1.0), tm2^20 " + fmt(r_tm) + "% (<= 2.0), rand2^20 " + fmt(r_rnd) +
                    "% (in [50, 115])"};
}

Outcome simple8b_conformance() {
  for (unsigned sel = 2; sel < 16; ++sel) {
    const auto [width, group] = s8b::kArrangements[sel];
    const std::vector<std::uint64_t> v(group, (std::uint64_t{1} << width) - 1);
    const auto w = s8b::encode(v);
    if (w.size() != 1 || s8b::selector_of(w[0]) != sel || s8b::decode(w, v.size()) != v)
      return {false, "selector " + std::to_string(sel) + " boundary group"};
  }
  for (unsigned sel = 0; sel < 2; ++sel) {
    const std::vector<std::uint64_t> zeros(s8b::kArrangements[sel].group_size, 0);
    const auto w = s8b::encode(zeros);
    if (w.size() != 1 || s8b::selector_of(w[0]) != sel || s8b::decode(w, zeros.size()) != zeros)
      return {false, "zero-run selector " + std::to_string(sel)};
  }
  bool rejected = false;
  try {
    s8b::encode(std::vector<std::uint64_t>{std::uint64_t{1} << 60});
  } catch (const UnencodableValue&) {
    rejected = true;
  }
  if (!rejected) return {false, "2^60 accepted"};

  std::mt19937_64 rng(60);
  std::vector<std::uint64_t> values(1000000);
  for (auto& v : values) v = (rng() >> 4) >> (rng() % 60);
  const auto words = s8b::encode(values);
  if (s8b::decode(words, values.size()) != values) return {false, "random roundtrip"};
  return {true, "16 selectors, 2^60 rejected, 10^6 random values in " + std::to_string(words.size()) + " words"};
}

Outcome linearity() {
  std::vector<double> times;
  std::string curve;
  for (unsigned e = 20; e <= 24; ++e) {
    const Bytes data = corpus::random(std::size_t{1} << e, 256, e);
    std::vector<double> trials;
    for (int t = 0; t < 3; ++t) {
      const auto t0 = std::chrono::steady_clock::now();
      const Bytes a = compress(data, audited());
      trials.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      if (t == 0 && decompress(a) != data) return {false, "roundtrip failure at 2^" + std::to_string(e)};
    }
    std::sort(trials.begin(), trials.end());
    times.push_back(trials[1]);
    curve += (curve.empty() ? "" : ", ") + std::string("2^") + std::to_string(e) + "=" + fmt(trials[1], 4) + "s";
  }
  double worst = 0;
  for (std::size_t i = 1; i < times.size(); ++i) worst = std::max(worst, times[i] / times[i - 1]);
  return {worst <= 3.0, "max step ratio " + fmt(worst, 2) + " (<= 3.0); " + curve};
}

Outcome determinism() {
  for (const Bytes& x : {corpus::fibonacci(25), corpus::thue_morse(100000), corpus::random(300000, 16, 4)}) {
    if (compress(x) != compress(x)) return {false, "archives differ between runs"};
  }
  std::ifstream in(std::string(GCIS_TEST_DATA) + "/banana.gcis", std::ios::binary);
  if (!in) return {false, "golden file missing"};
  const Bytes golden{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const std::string banana = "banana";
  const Bytes archive = compress(Bytes(banana.begin(), banana.end()));
  if (archive != golden) return {false, "banana archive differs from golden file"};
  return {true, "repeat runs identical; banana archive matches golden (" + std::to_string(golden.size()) + " bytes)"};
}

}  // namespace

int main() {
  run(1, "lossless roundtrip", lossless);
  run(2, "oracle equivalence (classify_types, sort_lms)", oracle_equivalence);
  run(5, "repetitive-text effectiveness", effectiveness);
  run(6, "Simple8b conformance", simple8b_conformance);
  run(7, "linear-time smoke", linearity);
  run(8, "archive determinism", determinism);
  // 3 and 4 are judged over every level produced by the compressions above.
  run(3, "reduction bound n' <= ceil(n/2) + 1", [] {
    return Outcome{audit.reduction_violations == 0,
                   std::to_string(audit.levels_seen) + " levels checked" +
                       (audit.first_violation.empty() ? "" : "; " + audit.first_violation)};
  });
  run(4, "stream bounds sum(L), sum(S) <= n", [] {
    return Outcome{audit.stream_violations == 0, std::to_string(audit.levels_seen) + " levels checked"};
  });
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
