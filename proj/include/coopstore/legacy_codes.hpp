#pragma once

#include <span>
#include <vector>

#include "coopstore/entropy.hpp"
#include "coopstore/matrix.hpp"
#include "coopstore/params.hpp"
#include "coopstore/repair_model.hpp"
#include "coopstore/stable_code.hpp"

namespace coopstore {

// ---------------------------------------------------------------------------
// Code-A: interference-alignment MSCR code with k = t = 2, n = d + 2, α = d.
// Node 1 stores a, node 2 stores b, node i+2 stores r_i = a + B_i b.
// Message vectors are (a, b) of length 2α.

struct CodeAParams {
  unsigned d = 0;
  unsigned n = 0;
  unsigned alpha = 0;
  Field field;
  FieldElem omega;
  /// (Σ_{i<α} ω^i)² · ω^{−(α−1)}
  FieldElem condition;
  /// B_1..B_d (index 0 holds B_1); diagonal entry r of B_i is ω^((i−1+r) mod α).
  std::vector<Mat> Bdiag;
  CodeParams params;

  const Mat& B(unsigned i) const { return Bdiag.at(i - 1); }
};

FieldElem code_a_condition(const Field& field, FieldElem omega, unsigned alpha);
/// Throws FieldTooSmall (q ≤ n − 1), NotGenerator, then InadmissibleOmega.
CodeAParams code_a_init(unsigned d, const Field& field, FieldElem omega);
/// Builds B_1..B_d for any nonzero ω without the field-size, generator or
/// admissibility checks. Negative controls only.
CodeAParams code_a_unchecked(unsigned d, const Field& field, FieldElem omega);

std::vector<ShardVector> code_a_encode(const CodeAParams& p, std::span<const FieldElem> a,
                                       std::span<const FieldElem> b);
Mat code_a_storage_functionals(const CodeAParams& p, NodeId node);
/// Rows sent to node 1 when the group is (1, other).
ObservationSet code_a_repair_functionals(const CodeAParams& p, NodeId other);

/// [z, B_i⁻¹z for i ≠ j]
Mat code_a_inverse_system(const CodeAParams& p, unsigned j);
/// [z, B_i z for i ≠ j]
Mat code_a_leakage_matrix(const CodeAParams& p, unsigned j);

struct CodeAAttack {
  std::vector<FieldElem> a;
  std::vector<FieldElem> b;
  Mat leakage_matrix;
  /// Every row node 1 downloads over all groups, plus the granted W_1.
  ObservationSet observations;
  std::size_t leaked_symbols = 0;
};

/// Recovers (a, b) from parity j's symbols sent to node 1 across all groups,
/// combined with node 1's content. Throws SingularLeakageMatrix.
CodeAAttack code_a_attack(const CodeAParams& p, unsigned j, std::span<const FieldElem> a,
                          std::span<const FieldElem> b);

/// Repair downloads of node 1 only. Node 1's own content is granted to the
/// receiver and labeled "W_1[granted]".
class CodeARepairModel final : public RepairModel {
 public:
  explicit CodeARepairModel(CodeAParams p) : p_(std::move(p)) {}

  std::string name() const override { return "code-a"; }
  const CodeParams& params() const override { return p_.params; }
  const Field& field() const override { return p_.field; }
  Mat storage_functionals(NodeId node) const override { return code_a_storage_functionals(p_, node); }
  std::vector<Transfer> transfers(const RepairContext& ctx) const override;
  bool models_receiver(NodeId node) const override { return node == 1; }
  std::vector<RepairContext> all_contexts() const override;
  std::vector<RepairContext> contexts_for(NodeId node) const override;

  const CodeAParams& code() const { return p_; }

 private:
  CodeAParams p_;
};

// ---------------------------------------------------------------------------
// Code-B: the d = k deployment without G'. Failed nodes of a group are ranked by
// id; helper λ sends its j-th symbol m_jᵀg_λ to the j-th ranked node.

class CodeB {
 public:
  static CodeB create(unsigned n, unsigned k, unsigned t, const Field& field);

  const CodeParams& params() const { return params_; }
  const Field& field() const { return field_; }
  const Mat& G() const { return G_; }

  std::vector<ShardVector> encode(const Mat& data) const;
  Mat storage_functionals(NodeId node) const;
  /// Phase-1 records (helper, receiver, symbol) for a sorted group.
  std::vector<TransferRecord> repair_data(const RepairContext& ctx, std::span<const ShardVector> shards) const;
  std::vector<Transfer> repair_functionals(const RepairContext& ctx) const;
  std::vector<ShardVector> repair(const RepairContext& ctx, std::span<const ShardVector> shards,
                                  RepairTranscript* transcript = nullptr) const;

 private:
  CodeB(CodeParams p, Field f, Mat g) : params_(p), field_(std::move(f)), G_(std::move(g)) {}
  void check_context(const RepairContext& ctx) const;

  CodeParams params_;
  Field field_;
  Mat G_;
};

struct CodeBAttack {
  Mat recovered;
  ObservationSet observations;
  std::size_t leaked_symbols = 0;
  std::vector<RepairContext> contexts;
};

/// Sliding groups [i, t−1+i], i = 1..t, with helpers [2t, 2t+k−1]; the
/// eavesdropper reads node t's downloads. Throws ParameterTooSmall if n < 2t+k−1.
CodeBAttack code_b_attack(const CodeB& code, const Mat& data);

class CodeBRepairModel final : public RepairModel {
 public:
  explicit CodeBRepairModel(CodeB code) : code_(std::move(code)) {}

  std::string name() const override { return "code-b"; }
  const CodeParams& params() const override { return code_.params(); }
  const Field& field() const override { return code_.field(); }
  Mat storage_functionals(NodeId node) const override { return code_.storage_functionals(node); }
  std::vector<Transfer> transfers(const RepairContext& ctx) const override { return code_.repair_functionals(ctx); }

  const CodeB& code() const { return code_; }

 private:
  CodeB code_;
};

}  // namespace coopstore
