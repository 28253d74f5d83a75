#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coopstore {

enum class Errc {
  // field_core
  NonPrimeModulus,
  ReduciblePolynomial,
  UnsupportedField,
  Singular,
  DuplicatePoint,
  FieldTooSmall,
  DependentPoints,
  DimensionMismatch,
  // linear_entropy
  InstanceTooLarge,
  // stable_mscr
  InvalidParams,
  SelfRepair,
  InvalidContext,
  MissingShard,
  DuplicateNode,
  TooFewShards,
  // legacy_codes
  NotGenerator,
  InadmissibleOmega,
  InvalidGroup,
  SingularLeakageMatrix,
  ParameterTooSmall,
  // eavesdropper
  InvalidEveModel,
  InvalidL,
  LemmaViolation,
  NonIntegralParams,
  // secure_precoder
  NotCoveredRegime,
  FieldKindUnsupported,
  VacuousScheme,
  LengthMismatch,
  // dss_cli
  IoError,
  InvalidConfig,
  CorruptShard,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception; `code()` is the
/// machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coopstore
