#include "coopstore/cli/striping.hpp"

#include "coopstore/error.hpp"

namespace coopstore::cli {

unsigned payload_bits(const Field& field) {
  unsigned b = 0;
  while (b < 63 && (std::uint64_t{1} << (b + 1)) <= field.order()) ++b;
  return b;
}

std::vector<FieldElem> pack_bytes(const Field& field, std::span<const std::uint8_t> bytes, std::size_t block) {
  if (block == 0) throw Error(Errc::DimensionMismatch, "block size must be positive");
  const unsigned w = payload_bits(field);
  if (w == 0) throw Error(Errc::UnsupportedField, "field too small to carry payload bits");
  std::vector<std::uint8_t> framed(8);
  const std::uint64_t len = bytes.size();
  for (int i = 0; i < 8; ++i) framed[i] = static_cast<std::uint8_t>(len >> (8 * i));
  framed.insert(framed.end(), bytes.begin(), bytes.end());

  std::vector<FieldElem> out;
  std::uint64_t acc = 0;
  unsigned have = 0;
  for (std::uint8_t byte : framed) {
    acc |= std::uint64_t{byte} << have;
    have += 8;
    while (have >= w) {
      out.push_back(field.element(acc & ((std::uint64_t{1} << w) - 1)));
      acc >>= w;
      have -= w;
    }
  }
  if (have > 0) out.push_back(field.element(acc));
  while (out.size() % block != 0) out.push_back(field.zero());
  return out;
}

std::vector<std::uint8_t> unpack_bytes(const Field& field, std::span<const FieldElem> symbols) {
  const unsigned w = payload_bits(field);
  std::vector<std::uint8_t> raw;
  std::uint64_t acc = 0;
  unsigned have = 0;
  for (FieldElem s : symbols) {
    if (s.value >> w) throw Error(Errc::CorruptShard, "symbol value exceeds payload width");
    acc |= s.value << have;
    have += w;
    while (have >= 8) {
      raw.push_back(static_cast<std::uint8_t>(acc & 0xff));
      acc >>= 8;
      have -= 8;
    }
  }
  if (raw.size() < 8) throw Error(Errc::CorruptShard, "stream shorter than its length prefix");
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len |= std::uint64_t{raw[i]} << (8 * i);
  if (len > raw.size() - 8) throw Error(Errc::CorruptShard, "length prefix exceeds decoded stream");
  return {raw.begin() + 8, raw.begin() + 8 + static_cast<std::ptrdiff_t>(len)};
}

std::vector<std::vector<FieldElem>> stripe(std::span<const FieldElem> symbols, std::size_t block) {
  if (block == 0 || symbols.size() % block != 0) {
    throw Error(Errc::DimensionMismatch, "symbol count is not a multiple of the generation size");
  }
  std::vector<std::vector<FieldElem>> out;
  for (std::size_t g = 0; g < symbols.size(); g += block) out.emplace_back(symbols.begin() + g, symbols.begin() + g + block);
  return out;
}

std::vector<FieldElem> unstripe(const std::vector<std::vector<FieldElem>>& generations) {
  std::vector<FieldElem> out;
  for (const auto& g : generations) out.insert(out.end(), g.begin(), g.end());
  return out;
}

}  // namespace coopstore::cli
