#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coopstore/field.hpp"

namespace coopstore::cli {

/// Bits carried by one symbol: floor(log2 q).
unsigned payload_bits(const Field& field);

/// u64le byte count ‖ bytes, packed LSB-first into payload_bits-wide symbols,
/// then zero-filled to a multiple of `block` symbols.
std::vector<FieldElem> pack_bytes(const Field& field, std::span<const std::uint8_t> bytes, std::size_t block);
/// Inverse of pack_bytes. Throws CorruptShard on an impossible length prefix.
std::vector<std::uint8_t> unpack_bytes(const Field& field, std::span<const FieldElem> symbols);

/// Splits a symbol stream into consecutive generations of `block` symbols.
std::vector<std::vector<FieldElem>> stripe(std::span<const FieldElem> symbols, std::size_t block);
std::vector<FieldElem> unstripe(const std::vector<std::vector<FieldElem>>& generations);

}  // namespace coopstore::cli
