#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcis/grammar.hpp"

namespace gcis::bench {

struct CorpusSpec {
  std::string name;
  std::vector<std::uint8_t> data;
};

// Parses "fib:k=30", "tm:n=1048576", "rand:n=..,sigma=..,seed=..",
// "periodic:n=..,pattern=..", or "file:<path>". Throws std::invalid_argument.
CorpusSpec load_corpus(const std::string& spec);

struct BenchRow {
  std::string corpus;
  std::size_t input_bytes = 0;
  std::size_t compressed_bytes = 0;
  double ratio_percent = 0.0;
  double compress_seconds = 0.0;
  double decompress_seconds = 0.0;
  std::size_t levels = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Thrown when a corpus does not survive the roundtrip.
class RoundtripFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Median wall time over `trials`, I/O excluded. Every row is verified before
// it is added.
BenchReport run_bench(const std::vector<CorpusSpec>& corpora, unsigned trials,
                      const BuildOptions& options = {});

enum class Format { text, csv, json };

Format parse_format(const std::string& name);
void write_report(std::ostream& os, const BenchReport& report, Format format);

}  // namespace gcis::bench
