#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coopstore/field.hpp"

namespace coopstore {

/// Storage nodes are numbered 1..n.
using NodeId = unsigned;
using NodeSet = std::vector<NodeId>;

/// Parameters of a cooperative regenerating code at the minimum-storage point.
struct CodeParams {
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;
  unsigned t = 0;
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned beta_prime = 0;
  unsigned B = 0;
  std::uint64_t q = 0;

  /// Scalar MSCR point (β = β' = 1): α = d − k + t, B = kα.
  static CodeParams mscr(unsigned n, unsigned k, unsigned d, unsigned t, std::uint64_t q);

  /// Throws InvalidParams unless n ≥ d + t, d ≥ k, t ≥ 1 and α, β, β', B sit at the MSCR point.
  void validate() const;
  /// validate() plus the d = k, α = t, β = β' = 1 restriction of the stable family.
  void validate_stable() const;

  /// Total phase-1 plus phase-2 symbols moved to repair one group.
  unsigned repair_bandwidth() const { return t * d * beta + t * (t - 1) * beta_prime; }

  std::string to_string() const;
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Failed group C repaired with help from D.
struct RepairContext {
  NodeSet group;
  NodeSet helpers;

  /// Throws InvalidContext unless |C| = t, |D| = d, C ∩ D = ∅, all ids in [1, n] and distinct.
  void validate(const CodeParams& p) const;
  bool in_group(NodeId id) const;
  std::string to_string() const;
  friend bool operator==(const RepairContext&, const RepairContext&) = default;
};

/// The α symbols stored on one node.
struct ShardVector {
  NodeId node = 0;
  std::vector<FieldElem> symbols;

  friend bool operator==(const ShardVector&, const ShardVector&) = default;
};

/// All r-subsets of `pool`, each sorted, in lexicographic order.
std::vector<NodeSet> combinations(const NodeSet& pool, std::size_t r);
/// {1..n} minus `exclude`.
NodeSet complement(unsigned n, const NodeSet& exclude);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
bool disjoint(const NodeSet& a, const NodeSet& b);
std::string format_set(const NodeSet& s);

}  // namespace coopstore
