#include <gtest/gtest.h>

#include "coopstore/secure_precoder.hpp"
#include "support.hpp"

using namespace coopstore;
using coopstore::testing::code_of;
using coopstore::testing::Gen;
using coopstore::testing::index_subsets;
using coopstore::testing::iota_nodes;

namespace {

class S1Binary : public ::testing::Test {
 protected:
  Field f = Field::create(FieldSpec::binary(4));
  StableCode code = StableCode::create(6, 3, 2, f);
  Gen g{601};
};

}  // namespace

TEST_F(S1Binary, SizesFromCapacity) {
  const SecureScheme s = scheme_create(code, 1, 1);
  EXPECT_EQ(s.secret_len, 1u);
  EXPECT_EQ(s.random_len, 5u);
  EXPECT_EQ(s.ext_degree(), 6u);
  EXPECT_EQ(s.ext.order(), std::uint64_t{1} << 24);
  EXPECT_EQ(s.moore.rows(), 6u);
  EXPECT_EQ(s.moore * s.moore_inv, Mat::identity(s.ext, 6));

  const SecureScheme open = scheme_create(code, 0, 0);
  EXPECT_EQ(open.secret_len, 6u);
  EXPECT_EQ(open.random_len, 0u);
}

TEST_F(S1Binary, VacuousAndUnsupported) {
  EXPECT_EQ(code_of([&] { scheme_create(code, 0, 2); }), Errc::VacuousScheme);
  const Field f11 = Field::create(FieldSpec::prime(11));
  EXPECT_EQ(code_of([&] { scheme_create(StableCode::create(6, 3, 2, f11), 1, 1); }), Errc::FieldKindUnsupported);
  EXPECT_EQ(code_of([&] { scheme_create(code, 2, 1); }), Errc::InvalidL);
}

TEST_F(S1Binary, ZeroInZeroOut) {
  const SecureScheme s = scheme_create(code, 1, 1);
  const std::vector<FieldElem> secret(1, s.ext.zero());
  const std::vector<FieldElem> rnd(5, s.ext.zero());
  for (const auto& v : precode(s, secret, rnd)) EXPECT_EQ(v, s.ext.zero());
}

TEST_F(S1Binary, LengthMismatch) {
  const SecureScheme s = scheme_create(code, 1, 1);
  EXPECT_EQ(code_of([&] { precode(s, g.vec(s.ext, 2), g.vec(s.ext, 5)); }), Errc::LengthMismatch);
  EXPECT_EQ(code_of([&] { precode(s, g.vec(s.ext, 1), g.vec(s.ext, 4)); }), Errc::LengthMismatch);
}

TEST_F(S1Binary, SameSecretDifferentRandomness) {
  const SecureScheme s = scheme_create(code, 1, 1);
  const auto secret = g.vec(s.ext, 1);
  const auto r1 = g.vec(s.ext, 5);
  auto r2 = r1;
  r2[0] = s.ext.add(r2[0], s.ext.one());
  const auto m1 = precode(s, secret, r1);
  const auto m2 = precode(s, secret, r2);
  EXPECT_NE(m1, m2);
  const auto u1 = unprecode(s, m1);
  const auto u2 = unprecode(s, m2);
  EXPECT_EQ(u1[0], secret[0]);
  EXPECT_EQ(u2[0], secret[0]);
  EXPECT_EQ(std::vector<FieldElem>(u1.begin() + 1, u1.end()), r1);
}

TEST_F(S1Binary, SecretFromEveryKSubset) {
  const SecureScheme s = scheme_create(code, 1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto secret = g.vec(s.ext, 1);
    const auto shards = secure_encode(s, secret, g.vec(s.ext, 5));
    ASSERT_EQ(shards.size(), 6u);
    int subsets = 0;
    for (const auto& set : combinations(iota_nodes(6), 3)) {
      std::vector<ShardVector> pick;
      for (NodeId id : set) pick.push_back(shards[id - 1]);
      EXPECT_EQ(secure_decode(s, pick), secret) << format_set(set);
      ++subsets;
    }
    EXPECT_EQ(subsets, 20);
  }
}

TEST_F(S1Binary, AllThirtyPlacementsLeakNothing) {
  const SecureScheme s = scheme_create(code, 1, 1);
  const auto placements = all_placements(code.params(), 1, 1);
  ASSERT_EQ(placements.size(), 30u);
  for (const auto& eve : placements) {
    const SecrecyCheck c = verify_secrecy(s, eve);
    EXPECT_TRUE(c.pass()) << c.describe();
    EXPECT_EQ(c.mutual_information, 0u);
    EXPECT_TRUE(c.leak_within_randomness);
    EXPECT_EQ(c.random_residual, 0u);
  }
}

TEST_F(S1Binary, EveryCoveredRegimeIsSecure) {
  for (unsigned l2 = 0; l2 <= 1; ++l2) {
    for (unsigned l1 = 0; l1 + l2 <= 2; ++l1) {
      const SecureScheme s = scheme_create(code, l1, l2);
      EXPECT_EQ(s.secret_len, *predicted_secrecy_capacity(code.params(), l1, l2));
      for (const auto& eve : all_placements(code.params(), l1, l2)) {
        EXPECT_TRUE(verify_secrecy(s, eve).pass()) << "(" << l1 << "," << l2 << ") " << eve.to_string();
      }
    }
  }
}

TEST_F(S1Binary, ShortRandomnessLeaks) {
  const SecureScheme s = scheme_create(code, 1, 1, 2);
  EXPECT_EQ(s.secret_len, 2u);
  EXPECT_EQ(s.random_len, 4u);
  bool any_fail = false;
  for (const auto& eve : all_placements(code.params(), 1, 1)) {
    const SecrecyCheck c = verify_secrecy(s, eve);
    if (!c.pass()) {
      any_fail = true;
      EXPECT_FALSE(c.leak_within_randomness) << c.describe();
      EXPECT_GT(c.mutual_information, 0u);
    }
  }
  EXPECT_TRUE(any_fail);
  const SecrecyCheck first = verify_secrecy(s, EveModel::make(code.params(), {1}, {2}));
  EXPECT_EQ(first.leak_rank, 30u);
  EXPECT_EQ(first.random_rank, 24u);
  EXPECT_EQ(first.mutual_information, 6u);
}

TEST_F(S1Binary, EmptyEavesdropper) {
  const SecureScheme s = scheme_create(code, 1, 1);
  const SecrecyCheck c = verify_secrecy(s, EveModel::make(code.params(), {}, {}));
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.leak_rank, 0u);
  EXPECT_EQ(c.mutual_information, 0u);
}

TEST_F(S1Binary, MooreLeadingRowMinorsInvertible) {
  const SecureScheme s = scheme_create(code, 1, 1);
  for (std::size_t size = 1; size <= 6; ++size) {
    for (const auto& cols : index_subsets(6, size)) {
      std::vector<std::size_t> rows(size);
      for (std::size_t i = 0; i < size; ++i) rows[i] = i;
      ASSERT_EQ(rank(s.moore.select_rows(rows).select_cols(cols)), size);
    }
  }
}
