#include <gtest/gtest.h>

#include <set>

#include "coopstore/error.hpp"
#include "coopstore/field.hpp"
#include "support.hpp"

using namespace coopstore;
using coopstore::testing::code_of;
using coopstore::testing::Gen;

namespace {

void check_axioms(const Field& f, FieldElem a, FieldElem b, FieldElem c) {
  ASSERT_EQ(f.add(a, b), f.add(b, a));
  ASSERT_EQ(f.mul(a, b), f.mul(b, a));
  ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
  ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
  ASSERT_EQ(f.sub(f.add(a, b), b), a);
  ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
  if (a != f.zero()) {
    ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
  }
}

}  // namespace

TEST(PrimeField, TwoHasPrimitiveOne) {
  const Field f = Field::create(FieldSpec::prime(2));
  EXPECT_EQ(f.order(), 2u);
  EXPECT_EQ(f.primitive_element(), f.one());
}

TEST(PrimeField, ElevenGeneratorsByExhaustiveOrder) {
  const Field f = Field::create(FieldSpec::prime(11));
  std::set<std::uint64_t> generators;
  for (std::uint64_t v = 1; v < 11; ++v) {
    // Order by repeated multiplication, independent of the library's factor test.
    FieldElem x = f.element(v);
    unsigned order = 1;
    while (x != f.one()) {
      x = f.mul(x, f.element(v));
      ++order;
    }
    EXPECT_EQ(f.multiplicative_order(f.element(v)), order);
    EXPECT_EQ(f.is_generator(f.element(v)), order == 10);
    if (order == 10) generators.insert(v);
  }
  EXPECT_EQ(generators, (std::set<std::uint64_t>{2, 6, 7, 8}));
  EXPECT_TRUE(generators.count(f.primitive_element().value));
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_EQ(code_of([] { Field::create(FieldSpec::prime(9)); }), Errc::NonPrimeModulus);
  EXPECT_EQ(code_of([] { Field::create(FieldSpec::prime(1)); }), Errc::NonPrimeModulus);
}

TEST(PrimeField, AxiomsExhaustiveUpTo13) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const Field f = Field::create(FieldSpec::prime(p));
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) check_axioms(f, f.element(a), f.element(b), f.element(c));
      }
    }
  }
}

TEST(BinaryField, Gf16WithX4PlusXPlus1) {
  const Field f = Field::create(FieldSpec::binary(4, 0x13));
  EXPECT_EQ(f.order(), 16u);
  const FieldElem x = f.element(2);
  std::set<std::uint64_t> seen;
  FieldElem p = f.one();
  for (int i = 0; i < 15; ++i) {
    seen.insert(p.value);
    p = f.mul(p, x);
  }
  EXPECT_EQ(p, f.one());
  EXPECT_EQ(seen.size(), 15u);
  EXPECT_EQ(f.multiplicative_order(x), 15u);
  // x^4 = x + 1
  EXPECT_EQ(f.pow(x, 4), f.element(0x3));
}

TEST(BinaryField, RejectsReducible) {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  EXPECT_EQ(code_of([] { Field::create(FieldSpec::binary(4, 0x15)); }), Errc::ReduciblePolynomial);
  EXPECT_EQ(code_of([] { Field::create(FieldSpec::binary(4, 0x11)); }), Errc::ReduciblePolynomial);
  EXPECT_EQ(code_of([] { Field::create(FieldSpec::binary(3, 0x13)); }), Errc::ReduciblePolynomial);
}

TEST(BinaryField, DefaultPolynomialsArePrimitive) {
  for (unsigned m = 2; m <= 24; ++m) {
    const Field f = Field::create(FieldSpec::binary(m));
    EXPECT_TRUE(f.is_generator(f.element(2))) << "m=" << m;
  }
  EXPECT_EQ(default_binary_polynomial(4), 0x13u);
  EXPECT_EQ(default_binary_polynomial(8), 0x11Du);
}

TEST(BinaryField, AxiomsSampled) {
  Gen g(0xF1E1D);
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u, 12u, 16u, 24u}) {
    const Field f = Field::create(FieldSpec::binary(m));
    for (int i = 0; i < 2000; ++i) check_axioms(f, g.elem(f), g.elem(f), g.elem(f));
  }
}

TEST(BinaryField, Gf16AxiomsExhaustive) {
  const Field f = Field::create(FieldSpec::binary(4));
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      for (std::uint64_t c = 0; c < 16; ++c) check_axioms(f, f.element(a), f.element(b), f.element(c));
    }
  }
}

TEST(Tower, Gf16DegreeSixUsesPublishedModulus) {
  const Field base = Field::create(FieldSpec::binary(4));
  const Field ext = Field::extension(base, 6);
  EXPECT_EQ(ext.order(), std::uint64_t{1} << 24);
  EXPECT_EQ(ext.degree(), 6u);
  EXPECT_EQ(ext.describe(), "GF(2^4, poly=0x13)[X]/(X^6 + 0x2X^3 + 0x2)");
  Gen g(7);
  for (int i = 0; i < 3000; ++i) check_axioms(ext, g.elem(ext), g.elem(ext), g.elem(ext));
}

TEST(Tower, EmbedAndCoordinatesRoundTrip) {
  const Field base = Field::create(FieldSpec::binary(4));
  const Field ext = Field::extension(base, 6);
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a = g.elem(ext);
    const auto coords = ext.coordinates(a);
    ASSERT_EQ(coords.size(), 6u);
    EXPECT_EQ(ext.from_coordinates(coords), a);
    const FieldElem s = g.elem(base);
    const FieldElem t = g.elem(base);
    EXPECT_EQ(ext.mul(ext.embed(s), ext.embed(t)), ext.embed(base.mul(s, t)));
    EXPECT_EQ(ext.add(ext.embed(s), ext.embed(t)), ext.embed(base.add(s, t)));
  }
}

TEST(Tower, FrobeniusIsAdditive) {
  const Field base = Field::create(FieldSpec::binary(4));
  const Field ext = Field::extension(base, 6);
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a = g.elem(ext);
    const FieldElem b = g.elem(ext);
    EXPECT_EQ(ext.pow(ext.add(a, b), 16), ext.add(ext.pow(a, 16), ext.pow(b, 16)));
  }
  // The base field is fixed by x -> x^16.
  for (std::uint64_t v = 0; v < 16; ++v) EXPECT_EQ(ext.pow(ext.embed(base.element(v)), 16), ext.embed(base.element(v)));
}

TEST(Tower, RejectsReducibleModulus) {
  const Field base = Field::create(FieldSpec::prime(3));
  // X^2 + 2 = (X + 1)(X + 2) over GF(3)
  EXPECT_EQ(code_of([&] { Field::extension(base, {base.element(2), base.zero(), base.one()}); }),
            Errc::ReduciblePolynomial);
  const Field f9 = Field::extension(base, {base.one(), base.zero(), base.one()});  // X^2 + 1
  EXPECT_EQ(f9.order(), 9u);
}

TEST(Subfield, BinaryCoordinatesOverGf2) {
  const Field f = Field::create(FieldSpec::binary(4));
  for (std::uint64_t v = 0; v < 16; ++v) {
    const auto bits = f.subfield_coordinates(f.element(v), 2);
    ASSERT_EQ(bits.size(), 4u);
    std::uint64_t back = 0;
    for (unsigned i = 0; i < 4; ++i) back |= bits[i].value << i;
    EXPECT_EQ(back, v);
  }
}

TEST(Subfield, TowerCoordinatesOverBase) {
  const Field base = Field::create(FieldSpec::binary(4));
  const Field ext = Field::extension(base, 6);
  Gen g(13);
  const FieldElem a = g.elem(ext);
  EXPECT_EQ(ext.subfield_coordinates(a, 16), ext.coordinates(a));
  EXPECT_EQ(ext.subfield_coordinates(a, ext.order()).size(), 1u);
}

TEST(FieldSpecParse, AcceptedForms) {
  EXPECT_EQ(FieldSpec::parse("p=11"), FieldSpec::prime(11));
  EXPECT_EQ(FieldSpec::parse("m=4"), FieldSpec::binary(4));
  EXPECT_EQ(FieldSpec::parse("m=4,poly=0x13"), FieldSpec::binary(4, 0x13));
  EXPECT_EQ(FieldSpec::parse("q=16").kind, FieldKind::BinaryExtension);
  EXPECT_EQ(FieldSpec::parse("q=16").m, 4u);
  EXPECT_EQ(FieldSpec::parse("q=13"), FieldSpec::prime(13));
  EXPECT_EQ(code_of([] { FieldSpec::parse("p=eleven"); }), Errc::InvalidConfig);
  EXPECT_EQ(code_of([] { FieldSpec::parse("r=3"); }), Errc::InvalidConfig);
}

TEST(FieldSpecParse, ToStringRoundTrips) {
  for (const char* s : {"p=11", "p=2", "m=4", "m=8,poly=0x11d"}) {
    const auto spec = FieldSpec::parse(s);
    EXPECT_EQ(FieldSpec::parse(spec.to_string()), spec) << s;
  }
}

TEST(FieldElemRange, ElementRejectsOutOfRange) {
  const Field f = Field::create(FieldSpec::prime(7));
  EXPECT_THROW(f.element(7), Error);
  EXPECT_FALSE(f.contains(FieldElem{7}));
  EXPECT_EQ(f.scalar(-1), f.element(6));
  EXPECT_EQ(f.scalar(15), f.element(1));
}
