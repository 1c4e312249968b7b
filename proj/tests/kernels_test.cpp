#include <gtest/gtest.h>

#include <random>

#include "gcis/corpus.hpp"
#include "gcis/kernels.hpp"
#include "test_util.hpp"

namespace gcis {
namespace {

TEST(Kernels, UnpackParallelMatchesSerial) {
  std::mt19937_64 rng(2);
  for (unsigned width = 1; width <= 32; ++width) {
    std::vector<std::uint32_t> v(rng() % 100000);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << width) - 1));
    const PackedIntArray a = pack_fixed(v, width);
    const auto serial = kernels::unpack_symbols_serial(a);
    ASSERT_EQ(serial, v);
    ASSERT_EQ(kernels::unpack_symbols_parallel(a), serial);
  }
}

TEST(Kernels, ExpandParallelMatchesSerial) {
  for (const auto& data : {corpus::fibonacci(24), corpus::thue_morse(1 << 18), corpus::random(1 << 18, 4, 3)}) {
    Text t = from_bytes(data);
    for (int depth = 0; depth < 4 && t.size() > 1; ++depth) {
      const ReduceResult r = reduce_once(t);
      const ExpandedDictionary ed = expand_rules(r.dictionary);
      const std::span<const Symbol> names(r.reduced.symbols.data(), r.reduced.body_size());
      std::vector<Symbol> serial, parallel;
      kernels::expand_serial(ed, r.dictionary.prefix_rule, names, serial);
      kernels::expand_parallel(ed, r.dictionary.prefix_rule, names, parallel);
      ASSERT_EQ(serial, parallel);
      ASSERT_EQ(serial, std::vector<Symbol>(t.symbols.begin(), t.symbols.end() - 1));
      t = r.reduced;
    }
  }
}

TEST(Kernels, ExpandEmptyNames) {
  const ExpandedDictionary ed = expand_rules(reduce_once(from_bytes({})).dictionary);
  std::vector<Symbol> out{9, 9};
  const std::vector<Symbol> prefix{5, 6};
  kernels::expand_parallel(ed, prefix, {}, out);
  EXPECT_EQ(out, prefix);
  kernels::expand_serial(ed, prefix, {}, out);
  EXPECT_EQ(out, prefix);
  EXPECT_GE(kernels::max_threads(), 1);
}

}  // namespace
}  // namespace gcis
