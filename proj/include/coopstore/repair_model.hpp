#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coopstore/matrix.hpp"
#include "coopstore/params.hpp"

namespace coopstore {

/// One symbol moved during repair, as a linear functional of vec(M).
struct Transfer {
  NodeId from = 0;
  NodeId to = 0;
  int phase = 1;  // 1 = helper download, 2 = exchange inside the group, 0 = granted knowledge
  std::vector<FieldElem> row;
  std::string label;
};

/// Functional-level view of a code and its repair protocol, shared by the
/// stability check and the eavesdropper.
class RepairModel {
 public:
  virtual ~RepairModel() = default;

  virtual std::string name() const = 0;
  virtual const CodeParams& params() const = 0;
  virtual const Field& field() const = 0;
  /// α×B matrix whose rows give the symbols stored on `node`.
  virtual Mat storage_functionals(NodeId node) const = 0;
  /// Every symbol moved while repairing under `ctx`.
  virtual std::vector<Transfer> transfers(const RepairContext& ctx) const = 0;
  /// Whether the model describes the repair downloads of `node`.
  virtual bool models_receiver(NodeId node) const { return node >= 1 && node <= params().n; }
  /// Every repair context in which `node` is repaired (lexicographic C, then D).
  virtual std::vector<RepairContext> contexts_for(NodeId node) const;

  /// All contexts the model covers; by default every t-subset C and every
  /// d-subset D of the rest.
  virtual std::vector<RepairContext> all_contexts() const;
  /// Transfers of `ctx` delivered to `receiver`.
  std::vector<Transfer> downloads(const RepairContext& ctx, NodeId receiver) const;
};

struct StabilityWitness {
  NodeId helper = 0;
  NodeId receiver = 0;
  RepairContext first;
  std::vector<FieldElem> first_row;
  RepairContext second;
  std::vector<FieldElem> second_row;

  std::string describe(const Field& f) const;
};

struct StabilityResult {
  bool stable = true;
  std::size_t contexts_checked = 0;
  std::size_t transfers_checked = 0;
  /// Whether phase-2 exchange symbols are also context independent.
  bool exchange_fixed = true;
  std::optional<StabilityWitness> witness;
};

/// Checks over every context that each helper-to-receiver functional depends
/// only on the (helper, receiver) pair.
StabilityResult stability_certificate(const RepairModel& model);

}  // namespace coopstore
