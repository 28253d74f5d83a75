#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coopstore {

/// Raw field symbol. For GF(p) the value is the residue; for GF(2^m) it is the
/// polynomial-basis bit pattern; for an extension tower it packs the base-field
/// coordinates, coordinate i in bits [i*w, (i+1)*w) with w the base symbol width.
/// Arithmetic always goes through the owning Field.
struct FieldElem {
  std::uint64_t value = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

enum class FieldKind : std::uint8_t { Prime = 0, BinaryExtension = 1, Tower = 2 };

struct FieldSpec {
  FieldKind kind = FieldKind::Prime;
  std::uint64_t p = 0;     // Prime
  unsigned m = 0;          // BinaryExtension degree
  std::uint64_t poly = 0;  // BinaryExtension modulus including the x^m term; 0 = default table entry

  static FieldSpec prime(std::uint64_t p) { return {FieldKind::Prime, p, 0, 0}; }
  static FieldSpec binary(unsigned m, std::uint64_t poly = 0) {
    return {FieldKind::BinaryExtension, 2, m, poly};
  }

  /// Accepts "p=11", "m=4", "m=4,poly=0x13" and "q=16" (prime or power of two).
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Reduction polynomial used for GF(2^m) when none is given. Every entry is
/// primitive; see README for the table.
std::uint64_t default_binary_polynomial(unsigned m);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

namespace detail {
struct FieldImpl;
}

/// Immutable handle to a finite field. Copies share the same tables.
class Field {
 public:
  Field() = default;

  static Field create(const FieldSpec& spec);

  /// Extension of `base` by the monic polynomial with coefficients `modulus`
  /// (low degree first, leading 1 included).
  static Field extension(const Field& base, std::vector<FieldElem> modulus);
  /// Extension of `base` of the given degree using the published default modulus.
  static Field extension(const Field& base, unsigned degree);

  bool valid() const noexcept { return impl_ != nullptr; }
  FieldKind kind() const;
  const FieldSpec& spec() const;
  std::uint64_t order() const;
  std::uint64_t characteristic() const;
  /// Bits needed to store any raw value.
  unsigned symbol_bits() const;
  /// Bytes per symbol in serialized form (1, 2, 4 or 8).
  unsigned symbol_bytes() const;

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const;
  /// Raw representation -> element; throws if out of range.
  FieldElem element(std::uint64_t raw) const;
  bool contains(FieldElem a) const;
  /// The integer n embedded as n·1.
  FieldElem scalar(std::int64_t n) const;
  /// The i-th element in a fixed enumeration of the field (0 -> zero, 1 -> one).
  FieldElem enumerate(std::uint64_t i) const { return element(i); }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  FieldElem primitive_element() const;
  std::uint64_t multiplicative_order(FieldElem a) const;
  bool is_generator(FieldElem a) const;

  // Extension towers.
  bool is_tower() const { return kind() == FieldKind::Tower; }
  const Field& base() const;
  unsigned degree() const;
  const std::vector<FieldElem>& modulus() const;
  FieldElem embed(FieldElem base_elem) const;
  std::vector<FieldElem> coordinates(FieldElem a) const;
  FieldElem from_coordinates(std::span<const FieldElem> coords) const;

  /// Coordinates of `a` over the subfield of order `sub_order`; supports the
  /// field itself, the base of a tower and GF(2) inside any binary field.
  std::vector<FieldElem> subfield_coordinates(FieldElem a, std::uint64_t sub_order) const;
  Field subfield(std::uint64_t sub_order) const;

  std::string describe() const;
  std::string format(FieldElem a) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  const detail::FieldImpl& impl() const;

  std::shared_ptr<const detail::FieldImpl> impl_;
};

}  // namespace coopstore
