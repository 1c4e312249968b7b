// gcis: grammar compression by induced sorting.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcis/archive.hpp"
#include "gcis/bench_runner.hpp"
#include "gcis/compressor.hpp"
#include "gcis/decoder.hpp"
#include "gcis/error.hpp"
#include "gcis/log.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kCorrupt = 3, kMismatch = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_input(const std::string& path) {
  if (path == "-") {
    std::cin >> std::noskipws;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return data;
}

void write_output(const std::string& path, const std::vector<std::uint8_t>& data) {
  if (path == "-") {
    std::cout.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    if (!std::cout) throw IoError("write error on stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write error on '" + path + "'");
}

struct LevelStat {
  std::size_t level;
  std::size_t sigma;
  std::size_t rules;
  std::size_t input_len;    // level text below, without sentinel
  std::size_t reduced_len;  // names produced by this level
  std::size_t encoded_bytes;
};

void print_stat(const std::vector<std::uint8_t>& archive, gcis::bench::Format format) {
  const gcis::Grammar g = gcis::deserialize(archive);
  std::vector<LevelStat> stats(g.levels.size());
  gcis::Text current = g.final_text;
  for (std::size_t j = g.levels.size(); j-- > 0;) {
    const gcis::LevelDictionary& d = g.levels[j];
    gcis::Text below = gcis::expand_level(gcis::expand_rules(d), d.prefix_rule, current, d.rhs_alphabet_size);
    stats[j] = {j + 1, d.sigma, d.rules.size(), below.body_size(), current.body_size(), gcis::encoded_level_size(d)};
    current = std::move(below);
  }
  if (current.body_size() != g.original_len) throw gcis::CorruptArchive("decoded length differs from header");
  const double ratio = g.original_len == 0 ? 0.0 : 100.0 * static_cast<double>(archive.size()) / g.original_len;

  switch (format) {
    case gcis::bench::Format::json: {
      nlohmann::json levels = nlohmann::json::array();
      for (const auto& s : stats)
        levels.push_back({{"level", s.level}, {"sigma", s.sigma}, {"rules", s.rules}, {"input_len", s.input_len},
                          {"reduced_len", s.reduced_len}, {"encoded_bytes", s.encoded_bytes}});
      std::cout << nlohmann::json{{"original_bytes", g.original_len},
                                  {"archive_bytes", archive.size()},
                                  {"ratio_percent", ratio},
                                  {"final_text_len", g.final_text.body_size()},
                                  {"levels", levels}}
                       .dump(2)
                << '\n';
      break;
    }
    case gcis::bench::Format::csv:
      std::cout << "level,sigma,rules,input_len,reduced_len,encoded_bytes\n";
      for (const auto& s : stats)
        std::cout << s.level << ',' << s.sigma << ',' << s.rules << ',' << s.input_len << ',' << s.reduced_len
                  << ',' << s.encoded_bytes << '\n';
      break;
    case gcis::bench::Format::text:
      std::cout << "original bytes: " << g.original_len << '\n'
                << "archive bytes:  " << archive.size() << '\n'
                << "ratio:          " << std::fixed << std::setprecision(3) << ratio << " %\n"
                << "levels:         " << g.levels.size() << '\n'
                << "final text:     " << g.final_text.body_size() << " symbols\n";
      for (const auto& s : stats)
        std::cout << "  level " << s.level << ": sigma=" << s.sigma << " n=" << s.input_len
                  << " reduced=" << s.reduced_len << " rules=" << s.rules << " bytes=" << s.encoded_bytes << '\n';
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grammar compression by induced suffix sorting"};
  app.require_subcommand(1);

  std::string input, output, format_name = "text";
  std::optional<std::size_t> max_levels;
  bool no_greedy = false;
  std::vector<std::string> corpora;
  unsigned trials = 3;

  auto add_build_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-levels", max_levels, "Stop after this many recursion levels");
    cmd->add_flag("--no-greedy-stop", no_greedy, "Recurse until all factors are distinct");
  };
  auto* compress = app.add_subcommand("compress", "Compress a file ('-' for stdin/stdout)");
  compress->add_option("input", input)->required();
  compress->add_option("output", output)->required();
  add_build_flags(compress);

  auto* decompress = app.add_subcommand("decompress", "Decompress an archive");
  decompress->add_option("input", input)->required();
  decompress->add_option("output", output)->required();

  auto* stat = app.add_subcommand("stat", "Print per-level statistics of an archive");
  stat->add_option("input", input)->required();
  stat->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Compress, decompress and compare");
  verify->add_option("input", input)->required();
  add_build_flags(verify);

  auto* bench = app.add_subcommand("bench", "Benchmark compression ratio and speed");
  bench->add_option("--corpus", corpora, "fib:k=N | tm:n=N | rand:n=N,sigma=S,seed=X | periodic:n=N,pattern=P | file:PATH")
      ->required();
  bench->add_option("--trials", trials);
  bench->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv", "json"}));
  add_build_flags(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  gcis::BuildOptions options;
  options.max_levels = max_levels;
  options.greedy_stop = !no_greedy;

  try {
    if (*compress) {
      const auto data = read_input(input);
      const auto archive = gcis::compress(data, options);
      write_output(output, archive);
      gcis::log::info("compressed " + std::to_string(data.size()) + " -> " + std::to_string(archive.size()) + " bytes");
    } else if (*decompress) {
      write_output(output, gcis::decompress(read_input(input)));
    } else if (*stat) {
      print_stat(read_input(input), gcis::bench::parse_format(format_name));
    } else if (*verify) {
      const auto data = read_input(input);
      const auto archive = gcis::compress(data, options);
      if (gcis::decompress(archive) != data) {
        std::cerr << "verify: roundtrip mismatch\n";
        return kMismatch;
      }
      std::cout << "ok " << data.size() << " -> " << archive.size() << " bytes\n";
    } else if (*bench) {
      std::vector<gcis::bench::CorpusSpec> specs;
      for (const auto& c : corpora) specs.push_back(gcis::bench::load_corpus(c));
      const auto report = gcis::bench::run_bench(specs, trials, options);
      gcis::bench::write_report(std::cout, report, gcis::bench::parse_format(format_name));
    }
  } catch (const IoError& e) {
    std::cerr << "gcis: " << e.what() << '\n';
    return kIo;
  } catch (const gcis::CorruptArchive& e) {
    std::cerr << "gcis: corrupt archive: " << e.what() << '\n';
    return kCorrupt;
  } catch (const gcis::bench::RoundtripFailure& e) {
    std::cerr << "gcis: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gcis: " << e.what() << '\n';
    return kUsage;
  } catch (const gcis::Error& e) {
    std::cerr << "gcis: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
