#include "coopstore/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "coopstore/error.hpp"

namespace coopstore {

namespace {

// Primitive polynomials, one per degree. Index = m.
constexpr std::array<std::uint64_t, 25> kBinaryPolynomials = {
    0x0,      0x3,      0x7,      0xb,      0x13,     0x25,      0x43,      0x89,    0x11d,
    0x211,    0x409,    0x805,    0x1053,   0x201b,   0x4443,    0x8003,    0x1100b, 0x20009,
    0x40081,  0x80027,  0x100009, 0x200005, 0x400003, 0x800021,  0x100001b,
};

constexpr unsigned kMaxBinaryDegree = 24;
constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxTowerOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableLimit = 256;

int degree_of(std::uint64_t poly) { return poly == 0 ? -1 : 63 - __builtin_clzll(poly); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

bool binary_irreducible(std::uint64_t poly) {
  const int m = degree_of(poly);
  if (m < 1) return false;
  // Any factorization has a factor of degree <= m/2.
  const std::uint64_t limit = std::uint64_t{1} << (m / 2 + 1);
  for (std::uint64_t g = 2; g < limit; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

unsigned bits_for(std::uint64_t max_value) {
  unsigned b = 0;
  while (b < 64 && (max_value >> b) != 0) ++b;
  return std::max(b, 1U);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t default_binary_polynomial(unsigned m) {
  if (m == 0 || m > kMaxBinaryDegree) {
    throw Error(Errc::UnsupportedField, "GF(2^m) supported for 1 <= m <= 24, got m=" + std::to_string(m));
  }
  return kBinaryPolynomials[m];
}

namespace detail {

struct FieldImpl {
  FieldSpec spec;
  std::uint64_t order = 0;
  std::uint64_t characteristic = 0;
  unsigned bits = 0;
  std::vector<std::uint8_t> mul_table;  // small binary fields only
  std::vector<std::uint8_t> inv_table;

  // Tower data.
  Field base;
  unsigned degree = 1;
  unsigned coeff_bits = 0;
  std::vector<FieldElem> modulus;

  FieldElem primitive;
  std::vector<std::uint64_t> group_factors;  // prime factors of order - 1
};

}  // namespace detail

namespace {

std::uint64_t binary_mul_raw(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned m) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1U) r ^= a << i;
  }
  for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i) {
    if ((r >> i) & 1U) r ^= poly << (i - static_cast<int>(m));
  }
  return r;
}

}  // namespace

const detail::FieldImpl& Field::impl() const {
  if (!impl_) throw Error(Errc::UnsupportedField, "use of an unbound field handle");
  return *impl_;
}

FieldKind Field::kind() const { return impl().spec.kind; }
const FieldSpec& Field::spec() const { return impl().spec; }
std::uint64_t Field::order() const { return impl().order; }
std::uint64_t Field::characteristic() const { return impl().characteristic; }
unsigned Field::symbol_bits() const { return impl().bits; }

unsigned Field::symbol_bytes() const {
  const unsigned b = symbol_bits();
  if (b <= 8) return 1;
  if (b <= 16) return 2;
  if (b <= 32) return 4;
  return 8;
}

FieldElem Field::one() const {
  if (kind() == FieldKind::Tower) return embed(base().one());
  return FieldElem{1};
}

bool Field::contains(FieldElem a) const {
  const auto& f = impl();
  switch (f.spec.kind) {
    case FieldKind::Prime:
    case FieldKind::BinaryExtension:
      return a.value < f.order;
    case FieldKind::Tower: {
      if (f.degree * f.coeff_bits < 64 && (a.value >> (f.degree * f.coeff_bits)) != 0) return false;
      const std::uint64_t mask = (std::uint64_t{1} << f.coeff_bits) - 1;
      for (unsigned i = 0; i < f.degree; ++i) {
        if (!f.base.contains(FieldElem{(a.value >> (i * f.coeff_bits)) & mask})) return false;
      }
      return true;
    }
  }
  return false;
}

FieldElem Field::element(std::uint64_t raw) const {
  const auto& f = impl();
  if (f.spec.kind == FieldKind::Tower) {
    // Enumeration index -> mixed-radix coordinates.
    if (raw >= f.order) throw Error(Errc::DimensionMismatch, "element index out of range for " + describe());
    std::vector<FieldElem> coords(f.degree);
    const std::uint64_t q = f.base.order();
    for (unsigned i = 0; i < f.degree; ++i) {
      coords[i] = f.base.element(raw % q);
      raw /= q;
    }
    return from_coordinates(coords);
  }
  if (raw >= f.order) {
    throw Error(Errc::DimensionMismatch, "value " + std::to_string(raw) + " not in " + describe());
  }
  return FieldElem{raw};
}

FieldElem Field::scalar(std::int64_t n) const {
  const auto& f = impl();
  switch (f.spec.kind) {
    case FieldKind::Prime: {
      const auto p = static_cast<std::int64_t>(f.order);
      return FieldElem{static_cast<std::uint64_t>(((n % p) + p) % p)};
    }
    case FieldKind::BinaryExtension:
      return FieldElem{static_cast<std::uint64_t>(n & 1)};
    case FieldKind::Tower:
      return embed(f.base.scalar(n));
  }
  return FieldElem{};
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  const auto& f = impl();
  switch (f.spec.kind) {
    case FieldKind::Prime: {
      const std::uint64_t s = a.value + b.value;
      return FieldElem{s >= f.order ? s - f.order : s};
    }
    case FieldKind::BinaryExtension:
      return FieldElem{a.value ^ b.value};
    case FieldKind::Tower: {
      if (f.characteristic == 2) return FieldElem{a.value ^ b.value};
      auto ca = coordinates(a);
      const auto cb = coordinates(b);
      for (unsigned i = 0; i < f.degree; ++i) ca[i] = f.base.add(ca[i], cb[i]);
      return from_coordinates(ca);
    }
  }
  return FieldElem{};
}

FieldElem Field::neg(FieldElem a) const {
  const auto& f = impl();
  switch (f.spec.kind) {
    case FieldKind::Prime:
      return FieldElem{a.value == 0 ? 0 : f.order - a.value};
    case FieldKind::BinaryExtension:
      return a;
    case FieldKind::Tower: {
      if (f.characteristic == 2) return a;
      auto ca = coordinates(a);
      for (auto& c : ca) c = f.base.neg(c);
      return from_coordinates(ca);
    }
  }
  return FieldElem{};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  const auto& f = impl();
  switch (f.spec.kind) {
    case FieldKind::Prime:
      return FieldElem{(a.value * b.value) % f.order};
    case FieldKind::BinaryExtension:
      if (!f.mul_table.empty()) return FieldElem{f.mul_table[a.value * f.order + b.value]};
      return FieldElem{binary_mul_raw(a.value, b.value, f.spec.poly, f.spec.m)};
    case FieldKind::Tower: {
      const unsigned deg = f.degree;
      const auto ca = coordinates(a);
      const auto cb = coordinates(b);
      std::vector<FieldElem> prod(2 * deg - 1, f.base.zero());
      for (unsigned i = 0; i < deg; ++i) {
        if (ca[i].value == 0) continue;
        for (unsigned j = 0; j < deg; ++j) {
          prod[i + j] = f.base.add(prod[i + j], f.base.mul(ca[i], cb[j]));
        }
      }
      // X^deg = -(modulus[0] + ... + modulus[deg-1] X^(deg-1))
      for (unsigned i = 2 * deg - 2; i >= deg; --i) {
        const FieldElem c = prod[i];
        if (c.value != 0) {
          for (unsigned j = 0; j < deg; ++j) {
            prod[i - deg + j] = f.base.sub(prod[i - deg + j], f.base.mul(c, f.modulus[j]));
          }
        }
      }
      prod.resize(deg);
      return from_coordinates(prod);
    }
  }
  return FieldElem{};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem Field::inv(FieldElem a) const {
  if (a.value == 0) throw Error(Errc::Singular, "inverse of zero in " + describe());
  const auto& f = impl();
  if (!f.inv_table.empty()) return FieldElem{f.inv_table[a.value]};
  return pow(a, f.order - 2);
}

std::uint64_t Field::multiplicative_order(FieldElem a) const {
  if (a.value == 0) throw Error(Errc::Singular, "zero has no multiplicative order");
  const auto& f = impl();
  std::uint64_t ord = f.order - 1;
  for (std::uint64_t p : f.group_factors) {
    while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
  }
  return ord;
}

bool Field::is_generator(FieldElem a) const {
  if (a.value == 0 || !contains(a)) return false;
  return multiplicative_order(a) == order() - 1;
}

FieldElem Field::primitive_element() const { return impl().primitive; }

const Field& Field::base() const {
  const auto& f = impl();
  if (f.spec.kind != FieldKind::Tower) return *this;
  return f.base;
}

unsigned Field::degree() const { return impl().degree; }

const std::vector<FieldElem>& Field::modulus() const { return impl().modulus; }

FieldElem Field::embed(FieldElem base_elem) const {
  const auto& f = impl();
  if (f.spec.kind != FieldKind::Tower) return base_elem;
  if (!f.base.contains(base_elem)) throw Error(Errc::DimensionMismatch, "embed: value not in base field");
  return base_elem;  // coefficient 0 occupies the low bits
}

std::vector<FieldElem> Field::coordinates(FieldElem a) const {
  const auto& f = impl();
  if (f.spec.kind != FieldKind::Tower) return {a};
  std::vector<FieldElem> out(f.degree);
  const std::uint64_t mask = (std::uint64_t{1} << f.coeff_bits) - 1;
  for (unsigned i = 0; i < f.degree; ++i) out[i] = FieldElem{(a.value >> (i * f.coeff_bits)) & mask};
  return out;
}

FieldElem Field::from_coordinates(std::span<const FieldElem> coords) const {
  const auto& f = impl();
  if (f.spec.kind != FieldKind::Tower) {
    if (coords.size() != 1) throw Error(Errc::DimensionMismatch, "from_coordinates: expected 1 coordinate");
    return coords[0];
  }
  if (coords.size() != f.degree) throw Error(Errc::DimensionMismatch, "from_coordinates: wrong coordinate count");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < f.degree; ++i) v |= coords[i].value << (i * f.coeff_bits);
  return FieldElem{v};
}

std::vector<FieldElem> Field::subfield_coordinates(FieldElem a, std::uint64_t sub_order) const {
  const auto& f = impl();
  if (sub_order == f.order) return {a};
  if (f.spec.kind == FieldKind::Tower && sub_order == f.base.order()) return coordinates(a);
  if (sub_order == 2 && f.characteristic == 2) {
    // Polynomial-basis bits are GF(2) coordinates because addition is XOR.
    std::vector<FieldElem> bits(f.bits);
    for (unsigned i = 0; i < f.bits; ++i) bits[i] = FieldElem{(a.value >> i) & 1U};
    return bits;
  }
  throw Error(Errc::UnsupportedField,
              "no coordinate map from " + describe() + " to subfield of order " + std::to_string(sub_order));
}

Field Field::subfield(std::uint64_t sub_order) const {
  const auto& f = impl();
  if (sub_order == f.order) return *this;
  if (f.spec.kind == FieldKind::Tower && sub_order == f.base.order()) return f.base;
  if (sub_order == 2 && f.characteristic == 2) return Field::create(FieldSpec::prime(2));
  throw Error(Errc::UnsupportedField,
              describe() + " has no supported subfield of order " + std::to_string(sub_order));
}

std::string Field::describe() const {
  if (!impl_) return "<unbound field>";
  const auto& f = *impl_;
  std::ostringstream os;
  switch (f.spec.kind) {
    case FieldKind::Prime:
      os << "GF(" << f.order << ")";
      break;
    case FieldKind::BinaryExtension:
      os << "GF(2^" << f.spec.m << ", poly=0x" << std::hex << f.spec.poly << ")";
      break;
    case FieldKind::Tower:
      os << f.base.describe() << "[X]/(";
      for (unsigned i = f.degree + 1; i-- > 0;) {
        if (i < f.degree && f.modulus[i].value == 0) continue;
        if (i < f.degree) os << " + ";
        if (i < f.degree && (f.modulus[i].value != 1 || i == 0)) os << f.base.format(f.modulus[i]);
        if (i > 1) os << "X^" << i;
        if (i == 1) os << "X";
      }
      os << ")";
      break;
  }
  return os.str();
}

std::string Field::format(FieldElem a) const {
  const auto& f = impl();
  if (f.spec.kind == FieldKind::Prime) return std::to_string(a.value);
  std::ostringstream os;
  os << "0x" << std::hex << a.value;
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  if (a.impl_->spec.kind != b.impl_->spec.kind) return false;
  if (a.impl_->spec.kind == FieldKind::Tower) {
    return a.impl_->base == b.impl_->base && a.impl_->modulus == b.impl_->modulus;
  }
  return a.impl_->spec == b.impl_->spec;
}

namespace {

void finish_group_data(detail::FieldImpl& impl, const Field& handle) {
  impl.group_factors = prime_factors(impl.order - 1);
  if (impl.order == 2) {
    impl.primitive = handle.one();
    return;
  }
  for (std::uint64_t i = 2; i < impl.order; ++i) {
    const FieldElem g = handle.element(i);
    if (handle.is_generator(g)) {
      impl.primitive = g;
      return;
    }
  }
}

}  // namespace

Field Field::create(const FieldSpec& spec) {
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->spec = spec;
  switch (spec.kind) {
    case FieldKind::Prime: {
      if (!is_prime(spec.p)) throw Error(Errc::NonPrimeModulus, std::to_string(spec.p) + " is not prime");
      if (spec.p > kMaxPrime) throw Error(Errc::UnsupportedField, "prime modulus above 2^31");
      impl->spec.m = 1;
      impl->spec.poly = 0;
      impl->order = spec.p;
      impl->characteristic = spec.p;
      impl->bits = bits_for(spec.p - 1);
      break;
    }
    case FieldKind::BinaryExtension: {
      const std::uint64_t poly = spec.poly == 0 ? default_binary_polynomial(spec.m) : spec.poly;
      if (spec.m == 0 || spec.m > kMaxBinaryDegree) {
        throw Error(Errc::UnsupportedField, "GF(2^m) supported for 1 <= m <= 24");
      }
      if (degree_of(poly) != static_cast<int>(spec.m)) {
        throw Error(Errc::ReduciblePolynomial, "polynomial degree does not match m=" + std::to_string(spec.m));
      }
      if (!binary_irreducible(poly)) {
        std::ostringstream os;
        os << "0x" << std::hex << poly << " is reducible over GF(2)";
        throw Error(Errc::ReduciblePolynomial, os.str());
      }
      impl->spec.p = 2;
      impl->spec.poly = poly;
      impl->order = std::uint64_t{1} << spec.m;
      impl->characteristic = 2;
      impl->bits = spec.m;
      if (impl->order <= kTableLimit) {
        const std::uint64_t q = impl->order;
        impl->mul_table.resize(q * q);
        impl->inv_table.assign(q, 0);
        for (std::uint64_t a = 0; a < q; ++a) {
          for (std::uint64_t b = 0; b < q; ++b) {
            const auto prod = binary_mul_raw(a, b, poly, spec.m);
            impl->mul_table[a * q + b] = static_cast<std::uint8_t>(prod);
            if (prod == 1) impl->inv_table[a] = static_cast<std::uint8_t>(b);
          }
        }
      }
      break;
    }
    case FieldKind::Tower:
      throw Error(Errc::UnsupportedField, "towers are built with Field::extension");
  }
  Field handle(impl);
  finish_group_data(*impl, handle);
  return handle;
}

namespace {

// Remainder of `a` modulo monic `m`; both low-degree-first over `base`.
std::vector<FieldElem> poly_rem(const Field& base, std::vector<FieldElem> a, const std::vector<FieldElem>& m) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const FieldElem c = a.back();
    if (c.value != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = base.sub(a[shift + j], base.mul(c, m[j]));
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<FieldElem>& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem e) { return e.value == 0; });
}

bool tower_irreducible(const Field& base, const std::vector<FieldElem>& modulus) {
  const std::size_t deg = modulus.size() - 1;
  const std::uint64_t q = base.order();
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate all monic polynomials of degree d.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    std::vector<FieldElem> g(d + 1);
    g[d] = base.one();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = base.element(r % q);
        r /= q;
      }
      if (all_zero(poly_rem(base, modulus, g))) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::extension(const Field& base, std::vector<FieldElem> modulus) {
  if (!base.valid() || base.kind() == FieldKind::Tower) {
    throw Error(Errc::UnsupportedField, "tower base must be a prime or binary-extension field");
  }
  if (modulus.size() < 2 || modulus.back() != base.one()) {
    throw Error(Errc::ReduciblePolynomial, "extension modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (!base.contains(c)) throw Error(Errc::DimensionMismatch, "modulus coefficient outside base field");
  }
  const unsigned deg = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t order = 1;
  for (unsigned i = 0; i < deg; ++i) {
    if (order > kMaxTowerOrder / base.order()) throw Error(Errc::UnsupportedField, "tower order above 2^32");
    order *= base.order();
  }
  if (!tower_irreducible(base, modulus)) {
    throw Error(Errc::ReduciblePolynomial, "extension modulus is reducible over " + base.describe());
  }
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->spec.kind = FieldKind::Tower;
  impl->spec.p = base.characteristic();
  impl->spec.m = deg;
  impl->order = order;
  impl->characteristic = base.characteristic();
  impl->base = base;
  impl->degree = deg;
  impl->coeff_bits = base.symbol_bits();
  impl->bits = deg * impl->coeff_bits;
  impl->modulus = std::move(modulus);
  impl->modulus.pop_back();  // keep the non-leading coefficients
  Field handle(impl);
  finish_group_data(*impl, handle);
  return handle;
}

Field Field::extension(const Field& base, unsigned degree) {
  if (degree < 1) throw Error(Errc::UnsupportedField, "extension degree must be >= 1");
  // Fixed modulus for the degree-6 tower over GF(16):
  // X^6 + x X^3 + x over GF(2)[x]/(x^4 + x + 1).
  if (base == Field::create(FieldSpec::binary(4)) && degree == 6) {
    const FieldElem x{0x2};
    return extension(base, {x, base.zero(), base.zero(), x, base.zero(), base.zero(), base.one()});
  }
  // Otherwise: first irreducible X^deg + c X^a + c0 in enumeration order, then
  // any irreducible in enumeration order.
  const std::uint64_t q = base.order();
  for (unsigned a = 1; a < degree; ++a) {
    for (std::uint64_t c0 = 1; c0 < q; ++c0) {
      for (std::uint64_t ca = 1; ca < q; ++ca) {
        std::vector<FieldElem> mod(degree + 1, base.zero());
        mod[0] = base.element(c0);
        mod[a] = base.element(ca);
        mod[degree] = base.one();
        try {
          return extension(base, mod);
        } catch (const Error& e) {
          if (e.code() != Errc::ReduciblePolynomial) throw;
        }
      }
    }
  }
  if (degree == 1) return extension(base, std::vector<FieldElem>{base.zero(), base.one()});
  throw Error(Errc::ReduciblePolynomial, "no sparse irreducible modulus found for degree " + std::to_string(degree));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto parse_uint = [&](std::string_view v) -> std::uint64_t {
    int base = 10;
    if (v.size() > 2 && v[0] == '0' && (v[1] == 'x' || v[1] == 'X')) {
      v.remove_prefix(2);
      base = 16;
    }
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out, base);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
      throw Error(Errc::InvalidConfig, "bad number '" + std::string(v) + "' in field spec");
    }
    return out;
  };
  FieldSpec spec;
  bool have_kind = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::InvalidConfig, "field spec item '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::uint64_t value = parse_uint(item.substr(eq + 1));
    if (key == "p") {
      spec = FieldSpec::prime(value);
      have_kind = true;
    } else if (key == "m") {
      spec.kind = FieldKind::BinaryExtension;
      spec.p = 2;
      spec.m = static_cast<unsigned>(value);
      have_kind = true;
    } else if (key == "poly") {
      spec.poly = value;
    } else if (key == "q") {
      if (value >= 2 && (value & (value - 1)) == 0) {
        spec.kind = FieldKind::BinaryExtension;
        spec.p = 2;
        spec.m = static_cast<unsigned>(degree_of(value));
      } else {
        spec = FieldSpec::prime(value);
      }
      have_kind = true;
    } else {
      throw Error(Errc::InvalidConfig, "unknown field spec key '" + std::string(key) + "'");
    }
  }
  if (!have_kind) throw Error(Errc::InvalidConfig, "field spec needs p=, m= or q=");
  if (spec.kind == FieldKind::Prime && spec.poly != 0) {
    throw Error(Errc::InvalidConfig, "poly= only applies to binary fields");
  }
  return spec;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  if (kind == FieldKind::Prime) {
    os << "p=" << p;
  } else {
    os << "m=" << m;
    if (poly != 0) os << ",poly=0x" << std::hex << poly;
  }
  return os.str();
}

}  // namespace coopstore
