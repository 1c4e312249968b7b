#include "gcis/archive.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <string>

#include "gcis/error.hpp"
#include "gcis/packed_array.hpp"
#include "gcis/simple8b.hpp"

namespace gcis {
namespace {

void write_packed(ByteWriter& out, std::span<const Symbol> symbols, unsigned width) {
  out.words(pack_fixed(symbols, width).words());
}

std::vector<Symbol> read_packed(ByteReader& in, std::uint64_t count, unsigned width,
                                std::uint64_t alphabet_size, const char* what) {
  if (count > in.remaining() * 8 / width)
    throw TruncatedArchive(std::string(what) + ": symbol count exceeds remaining bytes");
  const std::size_t n = static_cast<std::size_t>(count);
  PackedIntArray arr(width, n, in.words(PackedIntArray::words_for(width, n)));
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t v = arr.get(i);
    if (v == kSentinel || v >= alphabet_size)
      throw CorruptArchive(std::string(what) + ": symbol " + std::to_string(v) + " out of range");
    out[i] = static_cast<Symbol>(v);
  }
  return out;
}

std::vector<std::uint64_t> read_s8b(ByteReader& in, std::uint64_t count, const char* what) {
  const std::uint64_t nwords = in.u64();
  if (nwords > in.remaining() / 8) throw TruncatedArchive(std::string(what) + ": word stream truncated");
  // A word holds at most 240 values.
  if (count > nwords * 240) throw TruncatedArchive(std::string(what) + ": too few words for item count");
  return s8b::decode(in.words(nwords), static_cast<std::size_t>(count));
}

void check_alphabet(std::uint64_t alphabet_size, const char* what) {
  if (alphabet_size < 1 || alphabet_size > std::numeric_limits<Symbol>::max())
    throw CorruptArchive(std::string(what) + ": alphabet size out of range");
}

}  // namespace

void ByteReader::require(std::uint64_t count) const {
  if (count > remaining())
    throw TruncatedArchive("archive truncated at byte " + std::to_string(pos_));
}

std::uint64_t ByteReader::u64() {
  require(8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes_[pos_ + i];
  pos_ += 8;
  return v;
}

std::uint16_t ByteReader::u16() {
  require(2);
  const std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

std::uint8_t ByteReader::u8() {
  require(1);
  return bytes_[pos_++];
}

std::vector<std::uint64_t> ByteReader::words(std::uint64_t count) {
  if (count > remaining() / 8) throw TruncatedArchive("archive truncated inside a word array");
  std::vector<std::uint64_t> out(static_cast<std::size_t>(count));
  for (auto& w : out) w = u64();
  return out;
}

std::span<const std::uint8_t> ByteReader::take(std::size_t count) {
  require(count);
  auto s = bytes_.subspan(pos_, count);
  pos_ += count;
  return s;
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u8(std::uint8_t v) { out_.push_back(v); }

void ByteWriter::words(std::span<const std::uint64_t> ws) {
  out_.reserve(out_.size() + ws.size() * 8);
  for (std::uint64_t w : ws) u64(w);
}

void ByteWriter::bytes(std::span<const std::uint8_t> bs) { out_.insert(out_.end(), bs.begin(), bs.end()); }

LevelStreams level_streams(const LevelDictionary& d) {
  return {d.rules.lcps(), d.rules.tail_lengths(), d.rules.tails()};
}

namespace {

void write_level(ByteWriter& out, const LevelDictionary& d) {
  const unsigned width = symbol_width(d.rhs_alphabet_size);
  const auto lwords = s8b::encode(d.rules.lcps());
  const auto swords = s8b::encode(d.rules.tail_lengths());
  const auto& tails = d.rules.tails();

  out.u64(d.sigma);
  out.u64(d.rhs_alphabet_size);
  out.u64(d.prefix_rule.size());
  out.u64(lwords.size());
  out.words(lwords);
  out.u64(swords.size());
  out.words(swords);
  out.u64(tails.size());
  write_packed(out, tails, width);
  write_packed(out, d.prefix_rule, width);
}

}  // namespace

std::vector<std::uint8_t> encode_level(const LevelDictionary& d) {
  ByteWriter out;
  write_level(out, d);
  return out.release();
}

std::size_t encoded_level_size(const LevelDictionary& d) {
  const unsigned width = symbol_width(d.rhs_alphabet_size);
  return 8 * (6 + s8b::encode(d.rules.lcps()).size() + s8b::encode(d.rules.tail_lengths()).size() +
              PackedIntArray::words_for(width, d.rules.tails().size()) +
              PackedIntArray::words_for(width, d.prefix_rule.size()));
}

LevelDictionary decode_level(ByteReader& in, std::uint32_t level) {
  LevelDictionary d;
  d.level = level;
  const std::uint64_t sigma = in.u64();
  d.rhs_alphabet_size = in.u64();
  check_alphabet(d.rhs_alphabet_size, "level header");
  const std::uint64_t prefix_len = in.u64();
  if (sigma == 0) throw CorruptArchive("level " + std::to_string(level) + ": sigma is zero");
  const unsigned width = symbol_width(d.rhs_alphabet_size);

  const auto lcps = read_s8b(in, sigma, "L stream");
  const auto tail_lengths = read_s8b(in, sigma, "S stream");
  const std::uint64_t r_count = in.u64();
  const auto tails = read_packed(in, r_count, width, d.rhs_alphabet_size, "R stream");
  d.prefix_rule = read_packed(in, prefix_len, width, d.rhs_alphabet_size, "prefix rule");

  d.sigma = static_cast<std::size_t>(sigma);
  d.rules.reserve(d.sigma, tails.size());
  std::size_t used = 0;
  for (std::size_t i = 0; i < d.sigma; ++i) {
    if (tail_lengths[i] > tails.size() - used)
      throw CorruptArchive("level " + std::to_string(level) + ": S entry exceeds remaining R symbols");
    d.rules.push_back(static_cast<std::size_t>(lcps[i]),
                      std::span<const Symbol>(tails).subspan(used, static_cast<std::size_t>(tail_lengths[i])));
    used += tail_lengths[i];
  }
  if (used != tails.size())
    throw CorruptArchive("level " + std::to_string(level) + ": R holds symbols not claimed by S");
  if (d.rules.lcp(0) != 0) throw CorruptArchive("level " + std::to_string(level) + ": first lcp is not zero");
  return d;
}

LevelDictionary decode_level(std::span<const std::uint8_t> block, std::uint32_t level) {
  ByteReader in(block);
  LevelDictionary d = decode_level(in, level);
  if (in.remaining() != 0) throw CorruptArchive("level block has trailing bytes");
  return d;
}

std::vector<std::uint8_t> serialize(const Grammar& g) {
  if (g.levels.size() > std::numeric_limits<std::uint16_t>::max())
    throw RangeError("serialize: too many levels");
  ByteWriter out;
  out.bytes(kMagic);
  out.u8(kFormatVersion);
  out.u64(g.original_len);
  out.u16(static_cast<std::uint16_t>(g.levels.size()));

  const Text& f = g.final_text;
  out.u64(f.body_size());
  out.u64(f.alphabet_size);
  write_packed(out, std::span<const Symbol>(f.symbols).first(f.body_size()), symbol_width(f.alphabet_size));

  for (auto it = g.levels.rbegin(); it != g.levels.rend(); ++it) write_level(out, *it);
  return out.release();
}

Grammar deserialize(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  const auto magic = in.take(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) throw BadMagic("not a GCIS archive");
  const std::uint8_t version = in.u8();
  if (version != kFormatVersion)
    throw UnsupportedVersion("unsupported archive version " + std::to_string(version));

  Grammar g;
  g.original_len = in.u64();
  const std::uint16_t level_count = in.u16();

  const std::uint64_t count = in.u64();
  const std::uint64_t alphabet = in.u64();
  check_alphabet(alphabet, "final text");
  g.final_text.symbols = read_packed(in, count, symbol_width(alphabet), alphabet, "final text");
  g.final_text.symbols.push_back(kSentinel);
  g.final_text.alphabet_size = alphabet;
  g.final_text.level = level_count;

  g.levels.resize(level_count);
  for (std::size_t j = level_count; j-- > 0;) g.levels[j] = decode_level(in, static_cast<std::uint32_t>(j + 1));
  if (in.remaining() != 0) throw CorruptArchive("trailing bytes after the last level block");

  // Each level's rule bodies are written over the previous level's names.
  for (std::size_t j = 0; j < g.levels.size(); ++j) {
    const std::uint64_t expected = j == 0 ? kByteAlphabetSize : g.levels[j - 1].sigma + 1;
    if (g.levels[j].rhs_alphabet_size != expected)
      throw CorruptArchive("level " + std::to_string(j + 1) + ": alphabet does not match the level below");
  }
  const std::uint64_t final_alphabet = g.levels.empty() ? kByteAlphabetSize : g.levels.back().sigma + 1;
  if (alphabet != final_alphabet) throw CorruptArchive("final text alphabet does not match the last level");
  return g;
}

}  // namespace gcis
