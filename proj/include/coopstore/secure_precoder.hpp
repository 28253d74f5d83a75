#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coopstore/eavesdropper.hpp"
#include "coopstore/stable_code.hpp"

namespace coopstore {

/// Gabidulin precoding of secret ‖ random over GF(q^B), q = |base field|.
/// Secret and random lengths count extension-field symbols.
struct SecureScheme {
  StableCode base_code;
  Field ext;
  StableCode ext_code;
  unsigned l1 = 0;
  unsigned l2 = 0;
  std::size_t secret_len = 0;
  std::size_t random_len = 0;
  /// B×B Moore matrix on the polynomial basis 1, X, …, X^{B−1}.
  Mat moore;
  Mat moore_inv;

  std::size_t ext_degree() const { return ext.degree(); }
};

/// Sizes come from the closed-form capacity for (l1, l2). `secret_len_override`
/// exists for negative controls only.
/// Errors: FieldKindUnsupported (prime base), NotCoveredRegime, VacuousScheme.
SecureScheme scheme_create(const StableCode& code, unsigned l1, unsigned l2,
                           std::optional<std::size_t> secret_len_override = std::nullopt);

/// c = (secret ‖ randomness)·Moore, returned as the message vector vec(M).
std::vector<FieldElem> precode(const SecureScheme& s, std::span<const FieldElem> secret,
                               std::span<const FieldElem> randomness);
/// Inverse of precode: returns secret ‖ randomness.
std::vector<FieldElem> unprecode(const SecureScheme& s, std::span<const FieldElem> message);

/// Encodes the precoded message with the lifted stable code.
std::vector<ShardVector> secure_encode(const SecureScheme& s, std::span<const FieldElem> secret,
                                       std::span<const FieldElem> randomness);
/// Reconstructs from k shards and returns the secret.
std::vector<FieldElem> secure_decode(const SecureScheme& s, std::span<const ShardVector> shards);

struct SecrecyCheck {
  EveModel eve;
  /// Ranks over the base field on the (secret, random) coordinates.
  std::size_t leak_rank = 0;
  std::size_t random_rank = 0;
  /// H(e) ≤ H(r)
  bool leak_within_randomness = true;
  /// H(r | secret, e)
  std::size_t random_residual = 0;
  /// I(secret; e)
  std::size_t mutual_information = 0;
  bool pass() const { return mutual_information == 0; }
  std::string describe() const;
};

SecrecyCheck verify_secrecy(const SecureScheme& s, const EveModel& eve);

}  // namespace coopstore
