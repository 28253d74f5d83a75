#pragma once

#include <span>
#include <vector>

#include "coopstore/matrix.hpp"
#include "coopstore/params.hpp"
#include "coopstore/repair_model.hpp"

namespace coopstore {

struct TransferRecord {
  NodeId from = 0;
  NodeId to = 0;
  int phase = 1;
  FieldElem symbol;
};

/// Symbols moved by one cooperative repair, in protocol order.
struct RepairTranscript {
  std::vector<TransferRecord> records;
  std::size_t phase1_symbols = 0;
  std::size_t phase2_symbols = 0;
};

/// Stable MSCR code with d = k, α = t, β = β' = 1. The t×k data matrix M is
/// stored as M·G; node j holds (m_1ᵀg_j, …, m_tᵀg_j). Helper λ always sends
/// (M g_λ)ᵀ g'_f to failed node f, whatever the group and helper set.
///
/// Message vectors index M row-major: vec(M)[i·k + c] = M(i, c).
class StableCode {
 public:
  /// G is Vandermonde on the points 1..n, G' = [I_t | Cauchy].
  static StableCode create(unsigned n, unsigned k, unsigned t, const Field& field);

  const CodeParams& params() const { return params_; }
  const Field& field() const { return field_; }
  const Mat& G() const { return G_; }
  const Mat& Gp() const { return Gp_; }

  std::vector<ShardVector> encode(const Mat& data) const;
  /// Phase-1 symbol computed from helper λ's own shard and the public g'_f.
  FieldElem repair_symbol(const ShardVector& helper, NodeId failed) const;
  /// Row r with r·vec(M) = repair_symbol(λ, f).
  std::vector<FieldElem> repair_functional(NodeId helper, NodeId failed) const;
  /// Row for the exchange symbol m'_{from}ᵀ g_{to}.
  std::vector<FieldElem> exchange_functional(NodeId from, NodeId to) const;
  Mat storage_functionals(NodeId node) const;

  std::vector<ShardVector> cooperative_repair(const RepairContext& ctx, std::span<const ShardVector> surviving,
                                              RepairTranscript* transcript = nullptr) const;
  /// Recovers M from any k distinct shards (extra shards are ignored).
  Mat reconstruct(std::span<const ShardVector> shards) const;

  /// Same code with G, G' embedded in the extension field `ext`.
  StableCode lift_to(const Field& ext) const;

  Mat data_from_vec(std::span<const FieldElem> v) const;
  std::vector<FieldElem> vec_from_data(const Mat& data) const;

 private:
  StableCode(CodeParams p, Field f, Mat g, Mat gp)
      : params_(p), field_(std::move(f)), G_(std::move(g)), Gp_(std::move(gp)) {}

  void check_node(NodeId id) const;

  CodeParams params_;
  Field field_;
  Mat G_;
  Mat Gp_;
};

/// RepairModel for the stable code. Functionals are obtained by running the
/// real repair protocol on the B unit messages and reading off the transcript.
class StableRepairModel final : public RepairModel {
 public:
  explicit StableRepairModel(StableCode code) : code_(std::move(code)) {}

  std::string name() const override { return "stable"; }
  const CodeParams& params() const override { return code_.params(); }
  const Field& field() const override { return code_.field(); }
  Mat storage_functionals(NodeId node) const override { return code_.storage_functionals(node); }
  std::vector<Transfer> transfers(const RepairContext& ctx) const override;

  const StableCode& code() const { return code_; }

 private:
  StableCode code_;
};

/// Lowest-id context repairing `failed` with `helper` in D.
RepairContext canonical_context(const CodeParams& p, NodeId helper, NodeId failed);

}  // namespace coopstore
