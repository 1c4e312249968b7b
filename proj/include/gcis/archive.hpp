#pragma once

// GCIS archive layout, all integers little-endian:
//
//   "GCIS" | version u8 (0x01) | original_len u64 | level_count u16
//   final text: count u64 | alphabet_size u64 | packed symbols
//   level blocks, last level first:
//     sigma u64 | rhs_alphabet_size u64 | prefix_len u64
//     L word count u64 | L words | S word count u64 | S words
//     R symbol count u64 | R packed | prefix packed
//
// Packed arrays use symbol_width(alphabet) bits per item and occupy whole
// 64-bit words. The final text is stored without its sentinel.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gcis/grammar.hpp"

namespace gcis {

inline constexpr std::array<std::uint8_t, 4> kMagic{'G', 'C', 'I', 'S'};
inline constexpr std::uint8_t kFormatVersion = 0x01;

// Sequential little-endian reader over a byte span; throws TruncatedArchive.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t u64();
  std::uint16_t u16();
  std::uint8_t u8();
  std::vector<std::uint64_t> words(std::uint64_t count);
  std::span<const std::uint8_t> take(std::size_t count);

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void require(std::uint64_t count) const;

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

class ByteWriter {
 public:
  void u64(std::uint64_t v);
  void u16(std::uint16_t v);
  void u8(std::uint8_t v);
  void words(std::span<const std::uint64_t> ws);
  void bytes(std::span<const std::uint8_t> bs);

  std::vector<std::uint8_t>& buffer() { return out_; }
  std::vector<std::uint8_t> release() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

// The three integer streams of a level as stored in the archive.
struct LevelStreams {
  std::vector<std::uint64_t> lcps;          // L
  std::vector<std::uint64_t> tail_lengths;  // S
  std::vector<Symbol> tails;                // R
};

LevelStreams level_streams(const LevelDictionary& d);

std::vector<std::uint8_t> encode_level(const LevelDictionary& d);
std::size_t encoded_level_size(const LevelDictionary& d);

// Decodes one level block from the reader's position.
LevelDictionary decode_level(ByteReader& in, std::uint32_t level);
LevelDictionary decode_level(std::span<const std::uint8_t> block, std::uint32_t level);

std::vector<std::uint8_t> serialize(const Grammar& g);
Grammar deserialize(std::span<const std::uint8_t> bytes);

}  // namespace gcis
