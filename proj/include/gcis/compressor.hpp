#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcis/archive.hpp"
#include "gcis/decoder.hpp"
#include "gcis/grammar.hpp"

namespace gcis {

inline std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data,
                                          const BuildOptions& options = {}) {
  return serialize(build_grammar(from_bytes(data), options));
}

}  // namespace gcis
