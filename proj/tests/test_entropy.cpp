#include <gtest/gtest.h>

#include "coopstore/entropy.hpp"
#include "support.hpp"

using namespace coopstore;
using coopstore::testing::code_of;
using coopstore::testing::Gen;

namespace {

ObservationSet obs(const Mat& rows) {
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows.rows(); ++r) labels.push_back("r" + std::to_string(r));
  return ObservationSet(rows, labels);
}

ObservationSet random_obs(Gen& g, const Field& f, std::size_t rows, std::size_t len) {
  return obs(g.mat(f, rows, len));
}

}  // namespace

TEST(EntropySymbols, Examples) {
  const Field f = Field::create(FieldSpec::prime(5));
  EXPECT_EQ(entropy_symbols(ObservationSet(f, 4)), 0u);
  EXPECT_EQ(entropy_symbols(obs(Mat::identity(f, 4))), 4u);

  ObservationSet x = obs(Mat::from_rows(f, {{1, 2, 0, 4}, {0, 1, 1, 0}}));
  const std::size_t before = entropy_symbols(x);
  const std::vector<FieldElem> dup(x.rows().row(0).begin(), x.rows().row(0).end());
  x.add(dup, "dup");
  EXPECT_EQ(entropy_symbols(x), before);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x.labels().back(), "dup");
}

TEST(ConditionalEntropy, Examples) {
  const Field f2 = Field::create(FieldSpec::prime(2));
  const ObservationSet x = obs(Mat::from_rows(f2, {{1, 0}}));
  const ObservationSet y = obs(Mat::from_rows(f2, {{0, 1}}));
  EXPECT_EQ(conditional_entropy(x, x), 0u);
  EXPECT_EQ(conditional_entropy(x, ObservationSet(f2, 2)), entropy_symbols(x));
  EXPECT_EQ(conditional_entropy(x, y), 1u);
}

TEST(ConditionalEntropy, BruteForceOverFourMessages) {
  const Field f2 = Field::create(FieldSpec::prime(2));
  const ObservationSet x = obs(Mat::from_rows(f2, {{1, 0}}));
  const ObservationSet y = obs(Mat::from_rows(f2, {{0, 1}}));
  ObservationSet xy = x;
  xy.append(y);
  // H(X|Y) = H(X,Y) − H(Y) in bits.
  const ExactBits hxy = brute_force_entropy(xy);
  const ExactBits hy = brute_force_entropy(y);
  EXPECT_EQ(hxy, ExactBits::symbols(2, 2));
  EXPECT_EQ(hy, ExactBits::symbols(1, 2));
}

TEST(MutualInformation, Examples) {
  const Field f3 = Field::create(FieldSpec::prime(3));
  const ObservationSet x = obs(Mat::from_rows(f3, {{1, 0}}));
  const ObservationSet y = obs(Mat::from_rows(f3, {{0, 2}}));
  EXPECT_EQ(mutual_information(x, ObservationSet(f3, 2)), 0u);
  EXPECT_EQ(mutual_information(x, x), entropy_symbols(x));
  EXPECT_EQ(mutual_information(x, y), 0u);
  // Over all 9 messages the joint output is uniform on 9 values.
  ObservationSet xy = x;
  xy.append(y);
  EXPECT_EQ(brute_force_entropy(xy), ExactBits::symbols(2, 3));
}

TEST(MutualInformation, DimensionMismatch) {
  const Field f = Field::create(FieldSpec::prime(3));
  const ObservationSet a(f, 2);
  const ObservationSet b(f, 3);
  EXPECT_EQ(code_of([&] { mutual_information(a, b); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { conditional_entropy(a, b); }), Errc::DimensionMismatch);
}

TEST(BruteForce, Examples) {
  const Field f2 = Field::create(FieldSpec::prime(2));
  const ExactBits three = brute_force_entropy(obs(Mat::identity(f2, 3)));
  EXPECT_EQ(three, ExactBits::symbols(3, 2));
  EXPECT_DOUBLE_EQ(three.bits(), 3.0);
  EXPECT_EQ(brute_force_entropy(obs(Mat::zeros(f2, 1, 3))), ExactBits{});
  EXPECT_EQ(brute_force_entropy(obs(Mat::zeros(f2, 1, 3))).bits(), 0.0);
}

TEST(BruteForce, TooLarge) {
  const Field f = Field::create(FieldSpec::prime(11));
  EXPECT_EQ(code_of([&] { brute_force_entropy(obs(Mat::identity(f, 6))); }), Errc::InstanceTooLarge);
}

TEST(BruteForce, AgreesWithRankOnRandomSets) {
  Gen g(201);
  int checked = 0;
  struct Case {
    FieldSpec spec;
    std::size_t max_len;
  };
  for (const Case& c : {Case{FieldSpec::prime(2), 12}, Case{FieldSpec::prime(3), 8}, Case{FieldSpec::prime(5), 6},
                        Case{FieldSpec::binary(2), 6}, Case{FieldSpec::binary(4), 4}}) {
    const Field f = Field::create(c.spec);
    for (int i = 0; i < 40; ++i) {
      const std::size_t len = g.between(1, c.max_len);
      const ObservationSet x = random_obs(g, f, g.between(0, len + 2), len);
      EXPECT_EQ(brute_force_entropy(x), ExactBits::symbols(entropy_symbols(x), f.order()))
          << c.spec.to_string() << " len=" << len;
      ++checked;
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(BruteForce, ThreeByFourOverGf2) {
  Gen g(202);
  const Field f2 = Field::create(FieldSpec::prime(2));
  for (int i = 0; i < 30; ++i) {
    const ObservationSet x = random_obs(g, f2, 3, 4);
    EXPECT_EQ(brute_force_entropy(x).bits(), static_cast<double>(rank(x.rows())));
  }
}

TEST(ExactBitsRepr, DistinctPrimesDoNotMix) {
  EXPECT_NE(ExactBits::symbols(1, 2), ExactBits::symbols(1, 3));
  EXPECT_EQ(ExactBits::symbols(2, 2), ExactBits::symbols(1, 4));
  EXPECT_EQ(ExactBits::symbols(0, 7), ExactBits{});
  EXPECT_EQ(ExactBits::symbols(1, 16).to_string(), ExactBits::symbols(4, 2).to_string());
  EXPECT_EQ(ExactBits::symbols(2, 11).to_string(), "2*log2(11)");
  EXPECT_EQ(ExactBits::symbols(0, 11).to_string(), "0");
  ExactBits half;
  half.coeff[3] = Rational(1, 2);
  half.coeff[2] = Rational(3);
  EXPECT_EQ(half.to_string(), "3*log2(2) + 1/2*log2(3)");
}

TEST(EntropyProperties, ChainRuleMonotonicityDataProcessing) {
  Gen g(203);
  for (const FieldSpec& spec : {FieldSpec::prime(2), FieldSpec::prime(11), FieldSpec::binary(8)}) {
    const Field f = Field::create(spec);
    for (int i = 0; i < 200; ++i) {
      const std::size_t len = g.between(1, 8);
      const ObservationSet x = random_obs(g, f, g.between(0, 6), len);
      const ObservationSet y = random_obs(g, f, g.between(0, 6), len);
      ObservationSet xy = x;
      xy.append(y);
      const std::size_t hx = entropy_symbols(x);
      const std::size_t hy = entropy_symbols(y);
      ASSERT_EQ(entropy_symbols(xy), hy + conditional_entropy(x, y));
      ASSERT_GE(entropy_symbols(xy), std::max(hx, hy));
      ASSERT_LE(hx, std::min(x.size(), len));
      ASSERT_LE(mutual_information(x, y), std::min(hx, hy));
      ASSERT_EQ(mutual_information(x, y), mutual_information(y, x));
      ASSERT_EQ(mutual_information(x, y), hx - conditional_entropy(x, y));
    }
  }
}
