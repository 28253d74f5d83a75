#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coopstore/entropy.hpp"
#include "coopstore/params.hpp"
#include "coopstore/repair_model.hpp"

namespace coopstore {

/// Passive adversary reading the contents of E and every repair download of F.
struct EveModel {
  NodeSet E;
  NodeSet F;
  /// k − l1 − l2 ids outside E ∪ F; the lowest ones unless given.
  NodeSet G;

  /// Sorts E and F, fills G and checks E ∩ F = ∅, ids in range, l1 + l2 ≤ k − 1.
  static EveModel make(const CodeParams& p, NodeSet E, NodeSet F);
  static EveModel make(const CodeParams& p, NodeSet E, NodeSet F, NodeSet G);

  unsigned l1() const { return static_cast<unsigned>(E.size()); }
  unsigned l2() const { return static_cast<unsigned>(F.size()); }
  std::string to_string() const;
};

/// W_E plus, for each i ∈ F, every download of i over every context containing i.
ObservationSet leakage_observations(const RepairModel& model, const EveModel& eve);

struct LeakageReport {
  EveModel eve;
  ObservationSet observations;
  std::size_t leaked_symbols = 0;
  std::size_t measured_capacity = 0;
  std::optional<std::size_t> predicted_capacity;  // nullopt = not covered
};

LeakageReport measure_leakage(const RepairModel& model, const EveModel& eve);
std::size_t measured_secrecy_capacity(const RepairModel& model, const EveModel& eve);

/// Closed-form capacity for stable codes; nullopt outside the covered regimes.
/// Throws InvalidL when l1 + l2 > k − 1.
std::optional<std::size_t> predicted_secrecy_capacity(const CodeParams& p, unsigned l1, unsigned l2);

/// Every eavesdropper placement with |E| = l1, |F| = l2 (exhaustive).
std::vector<EveModel> all_placements(const CodeParams& p, unsigned l1, unsigned l2);

// Functional sets built from a RepairModel. S_j^i is the phase-1 row helper j
// sends to i under the canonical context for (j, i).
Mat repair_rows(const RepairModel& model, NodeId helper, NodeId receiver);
ObservationSet storage_set(const RepairModel& model, const NodeSet& nodes);
/// S_H^F = {S_h^f : h ∈ H, f ∈ F}.
ObservationSet repair_set(const RepairModel& model, const NodeSet& helpers, const NodeSet& receivers);
/// S^F = S_{[1,n]∖{f}}^f for every f ∈ F.
ObservationSet full_repair_set(const RepairModel& model, const NodeSet& receivers);
/// All downloads of F over every context: S̃^F.
ObservationSet download_set(const RepairModel& model, const NodeSet& receivers);
/// Exchange rows delivered to F over every context.
ObservationSet exchange_set(const RepairModel& model, const NodeSet& receivers);

struct LemmaResult {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string witness;
};

/// Rank-identity checks for Lemmas 2–5 and the H(W_i | S̃^i) = 0 property.
/// Lemma 2/3 need the canonical disjoint-subset contexts; Lemma 4/5 quantify
/// over placements and helper choices.
std::vector<LemmaResult> lemma_suite(const RepairModel& model);
LemmaResult lemma2(const RepairModel& model);
LemmaResult lemma3(const RepairModel& model);
LemmaResult lemma4(const RepairModel& model);
LemmaResult lemma5(const RepairModel& model);
LemmaResult own_content_recoverable(const RepairModel& model);
/// Throws LemmaViolation naming the first failing result.
void require_all(const std::vector<LemmaResult>& results);

/// Worked verification on the lowest-id placement E = [1, l1], F = [l1+1, l1+l2]
/// for every (l1, l2) with l2 ≥ 1: exchange span equals W_F and S̃^F = {W_F, S^F};
/// S^F beyond node k is determined; leaked rank decomposes per helper.
std::vector<LemmaResult> placement_verifications(const RepairModel& model);

struct BandwidthComparison {
  Rational msr_total;
  Rational mscr_total;
};

/// Total symbols to repair t failures: t separate MSR repairs vs one cooperative repair.
BandwidthComparison bandwidth_comparison(unsigned n, unsigned k, unsigned d, unsigned t, unsigned B);

}  // namespace coopstore
