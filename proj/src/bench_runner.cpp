#include "gcis/bench_runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "gcis/compressor.hpp"
#include "gcis/corpus.hpp"

namespace gcis::bench {
namespace {

std::map<std::string, std::string> parse_params(const std::string& body) {
  std::map<std::string, std::string> params;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("corpus parameter '" + item + "' is not key=value");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return params;
}

std::uint64_t number(const std::map<std::string, std::string>& params, const std::string& key,
                     std::optional<std::uint64_t> fallback = std::nullopt) {
  const auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw std::invalid_argument("corpus parameter '" + key + "' is required");
  }
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(it->second, &used);
  if (used != it->second.size()) throw std::invalid_argument("corpus parameter '" + key + "' is not a number");
  return v;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
}

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

CorpusSpec load_corpus(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("corpus '" + spec + "' has no kind prefix");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  CorpusSpec c;
  c.name = spec;
  if (kind == "file") {
    std::ifstream in(body, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open corpus file '" + body + "'");
    c.data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return c;
  }
  const auto params = parse_params(body);
  if (kind == "fib") {
    c.data = corpus::fibonacci(static_cast<unsigned>(number(params, "k")));
  } else if (kind == "tm") {
    c.data = corpus::thue_morse(number(params, "n"));
  } else if (kind == "rand") {
    c.data = corpus::random(number(params, "n"), static_cast<unsigned>(number(params, "sigma", 256)),
                            number(params, "seed", 1));
  } else if (kind == "periodic") {
    const auto it = params.find("pattern");
    c.data = corpus::periodic(number(params, "n"), it == params.end() ? "abc" : it->second);
  } else {
    throw std::invalid_argument("unknown corpus kind '" + kind + "'");
  }
  return c;
}

BenchReport run_bench(const std::vector<CorpusSpec>& corpora, unsigned trials, const BuildOptions& options) {
  trials = std::max(trials, 1u);
  BenchReport report;
  for (const CorpusSpec& c : corpora) {
    std::vector<double> ctimes, dtimes;
    std::vector<std::uint8_t> archive, restored;
    for (unsigned t = 0; t < trials; ++t) {
      ctimes.push_back(seconds([&] { archive = compress(c.data, options); }));
      dtimes.push_back(seconds([&] { restored = decompress(archive); }));
      if (restored != c.data) throw RoundtripFailure("roundtrip mismatch on corpus '" + c.name + "'");
    }
    BenchRow row;
    row.corpus = c.name;
    row.input_bytes = c.data.size();
    row.compressed_bytes = archive.size();
    row.ratio_percent = c.data.empty() ? 0.0 : 100.0 * static_cast<double>(archive.size()) / c.data.size();
    row.compress_seconds = median(ctimes);
    row.decompress_seconds = median(dtimes);
    row.levels = deserialize(archive).levels.size();
    report.rows.push_back(row);
  }
  return report;
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void write_report(std::ostream& os, const BenchReport& report, Format format) {
  switch (format) {
    case Format::csv:
      os << "corpus,input_bytes,compressed_bytes,ratio_percent,compress_seconds,decompress_seconds,levels\n";
      for (const BenchRow& r : report.rows) {
        os << r.corpus << ',' << r.input_bytes << ',' << r.compressed_bytes << ',' << std::fixed
           << std::setprecision(4) << r.ratio_percent << ',' << std::setprecision(6) << r.compress_seconds << ','
           << r.decompress_seconds << ',' << r.levels << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const BenchRow& r : report.rows) {
        rows.push_back({{"corpus", r.corpus},
                        {"input_bytes", r.input_bytes},
                        {"compressed_bytes", r.compressed_bytes},
                        {"ratio_percent", r.ratio_percent},
                        {"compress_seconds", r.compress_seconds},
                        {"decompress_seconds", r.decompress_seconds},
                        {"levels", r.levels}});
      }
      os << nlohmann::json{{"rows", rows}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      os << std::left << std::setw(32) << "corpus" << std::right << std::setw(12) << "input" << std::setw(12)
         << "compressed" << std::setw(10) << "ratio%" << std::setw(12) << "comp s" << std::setw(12) << "decomp s"
         << std::setw(8) << "levels" << '\n';
      for (const BenchRow& r : report.rows) {
        os << std::left << std::setw(32) << r.corpus << std::right << std::setw(12) << r.input_bytes
           << std::setw(12) << r.compressed_bytes << std::setw(10) << std::fixed << std::setprecision(3)
           << r.ratio_percent << std::setw(12) << std::setprecision(4) << r.compress_seconds << std::setw(12)
           << r.decompress_seconds << std::setw(8) << r.levels << '\n';
      }
      break;
  }
}

}  // namespace gcis::bench
