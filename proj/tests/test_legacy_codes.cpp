#include <gtest/gtest.h>

#include "coopstore/eavesdropper.hpp"
#include "coopstore/legacy_codes.hpp"
#include "support.hpp"

using namespace coopstore;
using coopstore::testing::code_of;
using coopstore::testing::Gen;
using coopstore::testing::iota_nodes;

namespace {

std::vector<FieldElem> concat(std::vector<FieldElem> x, const std::vector<FieldElem>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

class A1 : public ::testing::Test {
 protected:
  Field f = Field::create(FieldSpec::prime(11));
  CodeAParams p = code_a_init(3, f, f.element(2));
  Gen g{401};

  // Diagonal entry r of B_i, computed directly.
  FieldElem bdiag(unsigned i, unsigned r) const { return f.pow(f.element(2), (i - 1 + r) % 3); }

  std::size_t row_index(const ObservationSet& obs, const std::string& label) const {
    for (std::size_t r = 0; r < obs.size(); ++r) {
      if (obs.labels()[r] == label) return r;
    }
    ADD_FAILURE() << "no row labeled " << label;
    return 0;
  }

  std::vector<FieldElem> row(const ObservationSet& obs, const std::string& label) const {
    const auto r = obs.rows().row(row_index(obs, label));
    return {r.begin(), r.end()};
  }
};

}  // namespace

TEST_F(A1, InitAccepted) {
  EXPECT_EQ(p.n, 5u);
  EXPECT_EQ(p.alpha, 3u);
  EXPECT_EQ(p.params.B, 6u);
  // (1 + 2 + 4)^2 · 2^-2 = 49 · 3 = 147 = 4 mod 11
  EXPECT_EQ(p.condition, f.element(4));
  EXPECT_TRUE(f.is_generator(p.omega));
  for (unsigned i = 1; i <= 3; ++i) {
    for (unsigned r = 0; r < 3; ++r) EXPECT_EQ(p.B(i).at(r, r), bdiag(i, r));
  }
}

TEST_F(A1, InitErrors) {
  EXPECT_EQ(code_of([&] { code_a_init(3, f, f.one()); }), Errc::NotGenerator);
  EXPECT_EQ(code_of([&] { code_a_init(3, f, f.element(3)); }), Errc::NotGenerator);
  const Field f5 = Field::create(FieldSpec::prime(5));
  // d = 4 gives n − 1 = 5 = q.
  EXPECT_EQ(code_of([&] { code_a_init(4, f5, f5.element(2)); }), Errc::FieldTooSmall);
  const Field f13 = Field::create(FieldSpec::prime(13));
  EXPECT_EQ(code_of([&] { code_a_init(3, f13, f13.element(2)); }), Errc::InadmissibleOmega);
}

TEST_F(A1, EncodeZeroBMakesParitiesEqualA) {
  const auto a = g.vec(f, 3);
  const std::vector<FieldElem> zero(3, f.zero());
  const auto shards = code_a_encode(p, a, zero);
  ASSERT_EQ(shards.size(), 5u);
  EXPECT_EQ(shards[0].symbols, a);
  EXPECT_EQ(shards[1].symbols, zero);
  for (unsigned i = 2; i < 5; ++i) EXPECT_EQ(shards[i].symbols, a);
}

TEST_F(A1, EncodeUnitB) {
  const std::vector<FieldElem> zero(3, f.zero());
  const std::vector<FieldElem> e1 = {f.one(), f.zero(), f.zero()};
  const auto shards = code_a_encode(p, zero, e1);
  for (unsigned i = 1; i <= 3; ++i) {
    EXPECT_EQ(shards[i + 1].symbols, (std::vector<FieldElem>{f.pow(f.element(2), (i - 1) % 3), f.zero(), f.zero()}));
  }
}

TEST_F(A1, EncodeMatchesDirectEvaluation) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = g.vec(f, 3);
    const auto b = g.vec(f, 3);
    const auto shards = code_a_encode(p, a, b);
    for (unsigned r = 0; r < 3; ++r) {
      // r_2 = a + B_2 b with B_2 = diag(ω, ω², 1).
      const std::uint64_t want = (a[r].value + b[r].value * (std::uint64_t{1} << ((1 + r) % 3))) % 11;
      EXPECT_EQ(shards[3].symbols[r], f.element(want));
    }
    // Storage functionals agree with the shard contents.
    const auto x = concat(a, b);
    for (NodeId node = 1; node <= 5; ++node) {
      const Mat w = code_a_storage_functionals(p, node);
      EXPECT_EQ(w * Mat::column_vector(f, x), Mat::column_vector(f, shards[node - 1].symbols));
    }
  }
  EXPECT_EQ(code_of([&] { code_a_encode(p, g.vec(f, 2), g.vec(f, 3)); }), Errc::DimensionMismatch);
}

TEST_F(A1, GroupWithNodeTwoRows) {
  const auto obs = code_a_repair_functionals(p, 2);
  ASSERT_EQ(obs.size(), 3u);
  for (unsigned j = 1; j <= 3; ++j) {
    std::vector<FieldElem> want;
    for (unsigned r = 0; r < 3; ++r) want.push_back(f.inv(bdiag(j, r)));
    want = concat(want, {f.one(), f.one(), f.one()});
    EXPECT_EQ(row(obs, "S_" + std::to_string(j + 2) + "^1(1,2)"), want);
  }
}

TEST_F(A1, InterferenceAlignsUnderGroupOneTwo) {
  const auto obs = code_a_repair_functionals(p, 2);
  const auto first = obs.rows().row(0).subspan(3);
  for (std::size_t r = 1; r < obs.size(); ++r) {
    const auto b_part = obs.rows().row(r).subspan(3);
    EXPECT_TRUE(std::equal(b_part.begin(), b_part.end(), first.begin(), first.end()));
  }
}

TEST_F(A1, GroupWithParityRows) {
  for (unsigned i = 1; i <= 3; ++i) {
    const auto obs = code_a_repair_functionals(p, i + 2);
    const std::string tag = "^1(1," + std::to_string(i + 2) + ")";
    ASSERT_EQ(obs.size(), 3u);
    std::vector<FieldElem> zbi;
    for (unsigned r = 0; r < 3; ++r) zbi.push_back(bdiag(i, r));
    EXPECT_EQ(row(obs, "S_2" + tag), concat({f.zero(), f.zero(), f.zero()}, zbi));
    for (unsigned j = 1; j <= 3; ++j) {
      if (j == i) continue;
      std::vector<FieldElem> a_part;
      for (unsigned r = 0; r < 3; ++r) a_part.push_back(f.div(bdiag(i, r), bdiag(j, r)));
      EXPECT_EQ(row(obs, "S_" + std::to_string(j + 2) + tag), concat(a_part, zbi));
    }
  }
}

TEST_F(A1, InvalidGroups) {
  EXPECT_EQ(code_of([&] { code_a_repair_functionals(p, 1); }), Errc::InvalidGroup);
  EXPECT_EQ(code_of([&] { code_a_repair_functionals(p, 6); }), Errc::InvalidGroup);
}

TEST_F(A1, AttackRecoversEverythingFromEachParity) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = g.vec(f, 3);
    const auto b = g.vec(f, 3);
    for (unsigned j = 1; j <= 3; ++j) {
      const CodeAAttack res = code_a_attack(p, j, a, b);
      EXPECT_EQ(res.a, a);
      EXPECT_EQ(res.b, b);
      EXPECT_EQ(rank(res.leakage_matrix), 3u);
      EXPECT_EQ(entropy_symbols(res.observations), 6u);
      EXPECT_EQ(res.leaked_symbols, 6u);
    }
  }
}

TEST_F(A1, AttackWithZeroB) {
  const std::vector<FieldElem> zero(3, f.zero());
  const auto res = code_a_attack(p, 2, g.vec(f, 3), zero);
  EXPECT_EQ(res.b, zero);
}

TEST_F(A1, NoSecrecyForNodeOne) {
  const CodeARepairModel model(p);
  EXPECT_EQ(measured_secrecy_capacity(model, EveModel::make(p.params, {}, {1})), 0u);
}

TEST(CodeAOmega, OmegaOneMakesTheLeakageMatrixSingular) {
  const Field f = Field::create(FieldSpec::prime(11));
  const CodeAParams bad = code_a_unchecked(3, f, f.one());
  EXPECT_EQ(bad.condition, f.element(9));
  const std::vector<FieldElem> a(3, f.one());
  for (unsigned j = 1; j <= 3; ++j) {
    EXPECT_LT(rank(code_a_leakage_matrix(bad, j)), 3u);
    EXPECT_EQ(code_of([&] { code_a_attack(bad, j, a, a); }), Errc::SingularLeakageMatrix);
  }
}

TEST(CodeAOmega, AdmissibleGeneratorsGiveInvertibleMatrices) {
  for (std::uint64_t q : {11, 13}) {
    const Field f = Field::create(FieldSpec::prime(q));
    for (unsigned d : {2u, 3u, 4u, 5u}) {
      if (q <= d + 1) continue;
      for (std::uint64_t w = 1; w < q; ++w) {
        const FieldElem omega = f.element(w);
        if (!f.is_generator(omega)) {
          EXPECT_EQ(code_of([&] { code_a_init(d, f, omega); }), Errc::NotGenerator);
          continue;
        }
        const CodeAParams raw = code_a_unchecked(d, f, omega);
        const FieldElem alpha_sq = f.mul(f.scalar(d), f.scalar(d));
        const bool admissible = raw.condition != f.zero() && raw.condition != alpha_sq;
        bool accepted = true;
        try {
          code_a_init(d, f, omega);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::InadmissibleOmega);
          accepted = false;
        }
        EXPECT_EQ(accepted, admissible);
        if (!admissible) continue;
        for (unsigned j = 1; j <= d; ++j) {
          EXPECT_EQ(rank(code_a_inverse_system(raw, j)), d) << "q=" << q << " d=" << d << " w=" << w;
          EXPECT_EQ(rank(code_a_leakage_matrix(raw, j)), d) << "q=" << q << " d=" << d << " w=" << w;
        }
      }
    }
  }
}

TEST(CodeAOmega, InadmissibleGeneratorWithInvertibleMatrices) {
  // Over GF(13) with d = 3, ω = 2 and ω = 7 generate and give condition 9 = α²,
  // yet both leakage matrices stay invertible. Admissibility is sufficient for
  // invertibility here, not necessary.
  const Field f = Field::create(FieldSpec::prime(13));
  for (std::uint64_t w : {2, 7}) {
    const CodeAParams raw = code_a_unchecked(3, f, f.element(w));
    EXPECT_TRUE(f.is_generator(raw.omega));
    EXPECT_EQ(raw.condition, f.element(9));
    for (unsigned j = 1; j <= 3; ++j) {
      EXPECT_EQ(rank(code_a_inverse_system(raw, j)), 3u);
      EXPECT_EQ(rank(code_a_leakage_matrix(raw, j)), 3u);
    }
  }
}

namespace {

class B1 : public ::testing::Test {
 protected:
  Field f = Field::create(FieldSpec::prime(11));
  CodeB code = CodeB::create(6, 3, 2, f);
  Gen g{402};

  FieldElem received(const std::vector<TransferRecord>& recs, NodeId from, NodeId to) {
    for (const auto& r : recs) {
      if (r.from == from && r.to == to) return r.symbol;
    }
    ADD_FAILURE() << "no transfer " << from << "->" << to;
    return f.zero();
  }
};

}  // namespace

TEST_F(B1, SerialOrderAssignsPackets) {
  const Mat m = g.mat(f, 2, 3);
  const auto shards = code.encode(m);
  const auto first = code.repair_data(RepairContext{{1, 2}, {3, 4, 5}}, shards);
  ASSERT_EQ(first.size(), 6u);
  for (NodeId lam : {3u, 4u, 5u}) {
    EXPECT_EQ(received(first, lam, 1), shards[lam - 1].symbols[0]);
    EXPECT_EQ(received(first, lam, 2), shards[lam - 1].symbols[1]);
  }
  // Node 2 ranks first in group [2,3] and now gets m_1ᵀg_λ instead of m_2ᵀg_λ.
  const auto second = code.repair_data(RepairContext{{2, 3}, {4, 5, 6}}, shards);
  for (NodeId lam : {4u, 5u, 6u}) {
    EXPECT_EQ(received(second, lam, 2), shards[lam - 1].symbols[0]);
    EXPECT_EQ(received(second, lam, 3), shards[lam - 1].symbols[1]);
  }
}

TEST_F(B1, ZeroDataZeroTransfers) {
  const auto shards = code.encode(Mat::zeros(f, 2, 3));
  for (const auto& r : code.repair_data(RepairContext{{2, 5}, {1, 3, 4}}, shards)) EXPECT_EQ(r.symbol, f.zero());
}

TEST_F(B1, FunctionalsMatchData) {
  const Mat m = g.mat(f, 2, 3);
  const auto shards = code.encode(m);
  const auto v = m.entries();
  for (const auto& c : combinations(iota_nodes(6), 2)) {
    for (const auto& d : combinations(complement(6, c), 3)) {
      const RepairContext ctx{c, d};
      const auto recs = code.repair_data(ctx, shards);
      for (const auto& tr : code.repair_functionals(ctx)) {
        if (tr.phase != 1) continue;
        FieldElem acc = f.zero();
        for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(tr.row[i], v[i]));
        EXPECT_EQ(acc, received(recs, tr.from, tr.to));
      }
    }
  }
}

TEST_F(B1, RepairIsCorrectForEveryContext) {
  for (int trial = 0; trial < 3; ++trial) {
    const auto shards = code.encode(g.mat(f, 2, 3));
    for (const auto& c : combinations(iota_nodes(6), 2)) {
      for (const auto& d : combinations(complement(6, c), 3)) {
        std::vector<ShardVector> helpers;
        for (NodeId id : d) helpers.push_back(shards[id - 1]);
        const auto out = code.repair(RepairContext{c, d}, helpers);
        ASSERT_EQ(out.size(), 2u);
        for (const auto& s : out) EXPECT_EQ(s, shards[s.node - 1]);
      }
    }
  }
}

TEST_F(B1, RepairDataRejectsBadContext) {
  const auto shards = code.encode(g.mat(f, 2, 3));
  EXPECT_EQ(code_of([&] { code.repair_data(RepairContext{{1, 3}, {3, 4, 5}}, shards); }), Errc::InvalidContext);
}

TEST_F(B1, SlidingGroupAttackRecoversM) {
  for (int trial = 0; trial < 10; ++trial) {
    const Mat m = g.mat(f, 2, 3);
    const CodeBAttack res = code_b_attack(code, m);
    EXPECT_EQ(res.recovered, m);
    EXPECT_EQ(res.leaked_symbols, 6u);
    EXPECT_EQ(entropy_symbols(res.observations), 6u);
    ASSERT_EQ(res.contexts.size(), 2u);
    EXPECT_EQ(res.contexts[0], (RepairContext{{1, 2}, {4, 5, 6}}));
    EXPECT_EQ(res.contexts[1], (RepairContext{{2, 3}, {4, 5, 6}}));
  }
}

TEST_F(B1, NodeTwoLeaksEverything) {
  const CodeBRepairModel model(code);
  EXPECT_EQ(measured_secrecy_capacity(model, EveModel::make(code.params(), {}, {2})), 0u);
}

TEST_F(B1, StabilityWitness) {
  const CodeBRepairModel model(code);
  const StabilityResult res = stability_certificate(model);
  EXPECT_FALSE(res.stable);
  ASSERT_TRUE(res.witness.has_value());
  const StabilityWitness& w = *res.witness;
  EXPECT_NE(w.first, w.second);
  EXPECT_NE(w.first_row, w.second_row);
  EXPECT_TRUE(w.first.in_group(w.receiver));
  EXPECT_TRUE(w.second.in_group(w.receiver));
  EXPECT_FALSE(w.describe(f).empty());
}

TEST(CodeBShapes, AttackNeedsEnoughNodes) {
  const Field f = Field::create(FieldSpec::prime(11));
  const CodeB code = CodeB::create(5, 3, 2, f);
  EXPECT_EQ(code_of([&] { code_b_attack(code, Mat::zeros(f, 2, 3)); }), Errc::ParameterTooSmall);
}
