#include <gtest/gtest.h>

#include "coopstore/eavesdropper.hpp"
#include "coopstore/legacy_codes.hpp"
#include "coopstore/stable_code.hpp"
#include "support.hpp"

using namespace coopstore;
using coopstore::testing::code_of;
using coopstore::testing::Gen;
using coopstore::testing::iota_nodes;

namespace {

class S1Eve : public ::testing::Test {
 protected:
  Field f = Field::create(FieldSpec::prime(11));
  StableRepairModel model{StableCode::create(6, 3, 2, f)};
  const CodeParams& p() const { return model.params(); }
};

ObservationSet stack(const ObservationSet& a, const ObservationSet& b) {
  ObservationSet out = a;
  out.append(b);
  return out;
}

}  // namespace

TEST_F(S1Eve, NoEavesdropperLeaksNothing) {
  const EveModel eve = EveModel::make(p(), {}, {});
  EXPECT_EQ(eve.G, (NodeSet{1, 2, 3}));
  EXPECT_EQ(leakage_observations(model, eve).size(), 0u);
  EXPECT_EQ(measured_secrecy_capacity(model, eve), 6u);
}

TEST_F(S1Eve, DownloadsOfNodeOne) {
  const auto rep = measure_leakage(model, EveModel::make(p(), {}, {1}));
  EXPECT_EQ(rep.leaked_symbols, 4u);
  EXPECT_EQ(rep.measured_capacity, 2u);
  EXPECT_EQ(rep.predicted_capacity, std::optional<std::size_t>{2});
  // Every context of node 1: C(5,1) groups × C(4,3) helper sets, 3 + 1 rows each.
  EXPECT_EQ(rep.observations.size(), 5u * 4u * 4u);
}

TEST_F(S1Eve, TwoDownloadObserversLeakEverything) {
  EXPECT_EQ(measured_secrecy_capacity(model, EveModel::make(p(), {}, {3, 6})), 0u);
}

TEST_F(S1Eve, EveModelValidation) {
  EXPECT_EQ(code_of([&] { EveModel::make(p(), {1}, {1}); }), Errc::InvalidEveModel);
  EXPECT_EQ(code_of([&] { EveModel::make(p(), {7}, {}); }), Errc::InvalidEveModel);
  EXPECT_EQ(code_of([&] { EveModel::make(p(), {1, 2}, {3}); }), Errc::InvalidEveModel);
  EXPECT_EQ(code_of([&] { EveModel::make(p(), {2, 2}, {}); }), Errc::InvalidEveModel);
  EXPECT_EQ(code_of([&] { EveModel::make(p(), {1}, {2}, {1, 3}); }), Errc::InvalidEveModel);
}

TEST_F(S1Eve, CapacityTableEveryPlacement) {
  struct Row {
    unsigned l1, l2;
    std::size_t capacity, placements;
  };
  for (const Row& r : {Row{0, 0, 6, 1}, Row{1, 0, 4, 6}, Row{2, 0, 2, 15}, Row{0, 1, 2, 6}, Row{1, 1, 1, 30},
                       Row{0, 2, 0, 15}}) {
    EXPECT_EQ(predicted_secrecy_capacity(p(), r.l1, r.l2), std::optional<std::size_t>{r.capacity});
    const auto placements = all_placements(p(), r.l1, r.l2);
    EXPECT_EQ(placements.size(), r.placements);
    for (const auto& eve : placements) {
      EXPECT_EQ(measured_secrecy_capacity(model, eve), r.capacity) << eve.to_string();
    }
  }
}

TEST_F(S1Eve, CapacityIsBMinusLeak) {
  for (const auto& eve : all_placements(p(), 1, 1)) {
    const auto rep = measure_leakage(model, eve);
    EXPECT_EQ(rep.measured_capacity + rep.leaked_symbols, p().B);
    EXPECT_EQ(rep.leaked_symbols, entropy_symbols(rep.observations));
  }
}

TEST_F(S1Eve, CapacityMatchesConditionalForm) {
  // B^(s) = (k − l1 − l2)α − H(S̃^F | W_E, W_F)
  for (unsigned l2 = 0; l2 <= 2; ++l2) {
    for (unsigned l1 = 0; l1 + l2 <= 2; ++l1) {
      for (const auto& eve : all_placements(p(), l1, l2)) {
        const auto cond = conditional_entropy(download_set(model, eve.F), storage_set(model, set_union(eve.E, eve.F)));
        EXPECT_EQ(measured_secrecy_capacity(model, eve), (3 - l1 - l2) * 2 - cond);
      }
    }
  }
}

TEST_F(S1Eve, LeakageIsMonotone) {
  Gen g(501);
  for (int i = 0; i < 60; ++i) {
    const unsigned l1 = static_cast<unsigned>(g.below(2));
    const unsigned l2 = static_cast<unsigned>(g.below(2 - l1));
    const NodeSet all = iota_nodes(6);
    const NodeSet chosen = g.subset(all, l1 + l2 + 1);
    const NodeSet E(chosen.begin(), chosen.begin() + l1);
    const NodeSet F(chosen.begin() + l1, chosen.begin() + l1 + l2);
    const NodeId extra = chosen.back();
    const std::size_t base = entropy_symbols(leakage_observations(model, EveModel::make(p(), E, F)));
    EXPECT_GE(entropy_symbols(leakage_observations(model, EveModel::make(p(), set_union(E, {extra}), F))), base);
    EXPECT_GE(entropy_symbols(leakage_observations(model, EveModel::make(p(), E, set_union(F, {extra})))), base);
  }
}

TEST_F(S1Eve, ExchangeRowsStayInsideStorageAndRepairSpan) {
  for (unsigned l2 = 1; l2 <= 2; ++l2) {
    for (const auto& F : combinations(iota_nodes(6), l2)) {
      const auto base = stack(storage_set(model, F), full_repair_set(model, F));
      EXPECT_TRUE(row_space_contains(base.rows(), exchange_set(model, F).rows()));
      EXPECT_TRUE(same_row_space(download_set(model, F).rows(), base.rows()));
      EXPECT_TRUE(same_row_space(exchange_set(model, F).rows(), storage_set(model, F).rows()));
    }
  }
}

TEST_F(S1Eve, OwnContentFromAllDownloads) {
  for (NodeId i = 1; i <= 6; ++i) {
    EXPECT_EQ(conditional_entropy(storage_set(model, {i}), download_set(model, {i})), 0u);
  }
}

TEST_F(S1Eve, LemmaTwoCanonicalSubsets) {
  EXPECT_EQ(entropy_symbols(repair_set(model, {3, 4, 5}, {1, 2})), 6u);
  const auto cond = conditional_entropy(repair_set(model, {4, 5}, {1, 2}),
                                        stack(storage_set(model, {1, 2}), repair_set(model, {3}, {1, 2})));
  EXPECT_EQ(cond, 0u);
}

TEST_F(S1Eve, LemmaSuitePasses) {
  const auto results = lemma_suite(model);
  ASSERT_EQ(results.size(), 5u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.pass) << r.name << ": " << r.witness;
    EXPECT_GT(r.checks, 0u) << r.name;
  }
  EXPECT_NO_THROW(require_all(results));
}

TEST_F(S1Eve, PlacementVerificationsPass) {
  for (const auto& r : placement_verifications(model)) EXPECT_TRUE(r.pass) << r.name << ": " << r.witness;
}

TEST_F(S1Eve, PerHelperRepairEntropy) {
  for (unsigned l2 = 1; l2 <= 2; ++l2) {
    for (const auto& F : combinations(iota_nodes(6), l2)) {
      for (NodeId h : complement(6, F)) EXPECT_EQ(entropy_symbols(repair_set(model, {h}, F)), l2);
    }
  }
}

TEST(EveBinary, CapacityTableOverGf16) {
  const Field f = Field::create(FieldSpec::binary(4));
  const StableRepairModel model(StableCode::create(6, 3, 2, f));
  for (unsigned l2 = 0; l2 <= 2; ++l2) {
    for (unsigned l1 = 0; l1 + l2 <= 2; ++l1) {
      const auto want = predicted_secrecy_capacity(model.params(), l1, l2);
      for (const auto& eve : all_placements(model.params(), l1, l2)) {
        EXPECT_EQ(measured_secrecy_capacity(model, eve), *want);
      }
    }
  }
}

TEST(EveOtherShapes, RandomStableInstancesMatchPrediction) {
  Gen g(502);
  for (int trial = 0; trial < 8; ++trial) {
    const unsigned k = static_cast<unsigned>(g.between(2, 4));
    const unsigned t = static_cast<unsigned>(g.between(1, 3));
    const unsigned n = k + t + static_cast<unsigned>(g.between(0, 1));
    const Field f = Field::create(FieldSpec::prime(13));
    const StableRepairModel model(StableCode::create(n, k, t, f));
    const unsigned l2 = static_cast<unsigned>(g.below(k));
    const unsigned l1 = static_cast<unsigned>(g.below(k - l2));
    const auto want = predicted_secrecy_capacity(model.params(), l1, l2);
    ASSERT_TRUE(want.has_value());
    for (const auto& eve : all_placements(model.params(), l1, l2)) {
      ASSERT_EQ(measured_secrecy_capacity(model, eve), *want) << model.params().to_string() << " " << eve.to_string();
    }
  }
}

TEST(Predicted, Examples) {
  const CodeParams s1 = CodeParams::mscr(6, 3, 3, 2, 11);
  EXPECT_EQ(predicted_secrecy_capacity(s1, 1, 1), std::optional<std::size_t>{1});
  EXPECT_EQ(predicted_secrecy_capacity(s1, 0, 0), std::optional<std::size_t>{s1.B});
  EXPECT_EQ(code_of([&] { predicted_secrecy_capacity(s1, 2, 1); }), Errc::InvalidL);
  const CodeParams wide = CodeParams::mscr(7, 2, 4, 3, 11);
  EXPECT_EQ(predicted_secrecy_capacity(wide, 0, 1), std::nullopt);
  // t > k with d = k stays covered.
  const CodeParams tall = CodeParams::mscr(6, 2, 2, 3, 11);
  EXPECT_EQ(predicted_secrecy_capacity(tall, 0, 1), std::optional<std::size_t>{(2 - 0 - 1) * (3 - 1)});
}

TEST(CodeBEve, LemmasFourAndFiveFail) {
  const Field f = Field::create(FieldSpec::prime(11));
  const CodeBRepairModel model(CodeB::create(6, 3, 2, f));
  EXPECT_FALSE(lemma4(model).pass);
  EXPECT_FALSE(lemma4(model).witness.empty());
  EXPECT_FALSE(lemma5(model).pass);
  EXPECT_EQ(code_of([&] { require_all(lemma_suite(model)); }), Errc::LemmaViolation);
  EXPECT_EQ(measured_secrecy_capacity(model, EveModel::make(model.params(), {}, {2})), 0u);
}

TEST(CodeAEve, OnlyNodeOneDownloadsAreModelled) {
  const Field f = Field::create(FieldSpec::prime(11));
  const CodeARepairModel model(code_a_init(3, f, f.element(2)));
  EXPECT_EQ(code_of([&] { leakage_observations(model, EveModel::make(model.params(), {}, {2})); }),
            Errc::InvalidEveModel);
}

TEST(Bandwidth, Examples) {
  const auto s1 = bandwidth_comparison(6, 3, 3, 2, 6);
  EXPECT_EQ(s1.msr_total, Rational(12));
  EXPECT_EQ(s1.mscr_total, Rational(8));
  EXPECT_LT(s1.mscr_total, s1.msr_total);
  const auto single = bandwidth_comparison(6, 3, 4, 1, 6);
  EXPECT_EQ(single.msr_total, single.mscr_total);
  const auto wide = bandwidth_comparison(7, 2, 4, 2, 8);
  EXPECT_EQ(wide.msr_total, Rational(32, 3));
  EXPECT_EQ(wide.mscr_total, Rational(10));
  EXPECT_LT(wide.mscr_total, wide.msr_total);
  EXPECT_EQ(code_of([] { bandwidth_comparison(6, 3, 3, 2, 5); }), Errc::NonIntegralParams);
}

TEST(Bandwidth, CooperationNeverCostsMore) {
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned d = k; d <= k + 3; ++d) {
      for (unsigned t = 1; t <= 4; ++t) {
        const unsigned B = k * (d - k + t);
        const auto bw = bandwidth_comparison(d + t, k, d, t, B);
        // With k = 1 both schemes download the whole file once per failure.
        if (t == 1 || k == 1) {
          EXPECT_EQ(bw.mscr_total, bw.msr_total);
        } else {
          EXPECT_LT(bw.mscr_total, bw.msr_total) << "k=" << k << " d=" << d << " t=" << t;
        }
      }
    }
  }
}
