#include "gcis/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef GCIS_HAVE_OPENMP
#include <omp.h>
#endif

namespace gcis::kernels {

std::vector<Symbol> unpack_symbols_serial(const PackedIntArray& arr) {
  std::vector<Symbol> out(arr.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Symbol>(arr.get(i));
  return out;
}

std::vector<Symbol> unpack_symbols_parallel(const PackedIntArray& arr) {
  const std::int64_t n = static_cast<std::int64_t>(arr.size());
  std::vector<Symbol> out(arr.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = static_cast<Symbol>(arr.get(i));
  return out;
}

void expand_serial(const ExpandedDictionary& ed, std::span<const Symbol> prefix,
                   std::span<const Symbol> names, std::vector<Symbol>& out) {
  out.assign(prefix.begin(), prefix.end());
  for (Symbol name : names) {
    const auto [start, len] = ed.boundaries.locate(name - 1);
    for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Symbol>(ed.bodies.get(start + i)));
  }
}

void expand_parallel(const ExpandedDictionary& ed, std::span<const Symbol> prefix,
                     std::span<const Symbol> names, std::vector<Symbol>& out) {
  const std::int64_t m = static_cast<std::int64_t>(names.size());
  std::vector<std::size_t> starts(names.size());
  std::vector<std::size_t> offsets(names.size() + 1);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const auto [start, len] = ed.boundaries.locate(names[i] - 1);
    starts[i] = start;
    offsets[i + 1] = len;
  }

  offsets[0] = prefix.size();
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  out.resize(offsets.back());
  std::copy(prefix.begin(), prefix.end(), out.begin());

#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < m; ++i) {
    const std::size_t len = offsets[i + 1] - offsets[i];
    Symbol* dst = out.data() + offsets[i];
    for (std::size_t t = 0; t < len; ++t) dst[t] = static_cast<Symbol>(ed.bodies.get(starts[i] + t));
  }
}

int max_threads() {
#ifdef GCIS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gcis::kernels
