#pragma once

// Data-parallel decode kernels. Each has a serial reference with identical
// output; the parallel versions use OpenMP when it is available.

#include <cstddef>
#include <span>
#include <vector>

#include "gcis/decoder.hpp"
#include "gcis/packed_array.hpp"
#include "gcis/text.hpp"

namespace gcis::kernels {

std::vector<Symbol> unpack_symbols_serial(const PackedIntArray& arr);
std::vector<Symbol> unpack_symbols_parallel(const PackedIntArray& arr);

// Writes prefix · body(names[0]) · body(names[1]) ⋯ into out (resized).
// Names are assumed already range-checked.
void expand_serial(const ExpandedDictionary& ed, std::span<const Symbol> prefix,
                   std::span<const Symbol> names, std::vector<Symbol>& out);
void expand_parallel(const ExpandedDictionary& ed, std::span<const Symbol> prefix,
                     std::span<const Symbol> names, std::vector<Symbol>& out);

int max_threads();

}  // namespace gcis::kernels
