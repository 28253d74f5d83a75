#include "coopstore/error.hpp"

namespace coopstore {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::Singular: return "Singular";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::DependentPoints: return "DependentPoints";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::SelfRepair: return "SelfRepair";
    case Errc::InvalidContext: return "InvalidContext";
    case Errc::MissingShard: return "MissingShard";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::TooFewShards: return "TooFewShards";
    case Errc::NotGenerator: return "NotGenerator";
    case Errc::InadmissibleOmega: return "InadmissibleOmega";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::SingularLeakageMatrix: return "SingularLeakageMatrix";
    case Errc::ParameterTooSmall: return "ParameterTooSmall";
    case Errc::InvalidEveModel: return "InvalidEveModel";
    case Errc::InvalidL: return "InvalidL";
    case Errc::LemmaViolation: return "LemmaViolation";
    case Errc::NonIntegralParams: return "NonIntegralParams";
    case Errc::NotCoveredRegime: return "NotCoveredRegime";
    case Errc::FieldKindUnsupported: return "FieldKindUnsupported";
    case Errc::VacuousScheme: return "VacuousScheme";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::IoError: return "IoError";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::CorruptShard: return "CorruptShard";
  }
  return "Unknown";
}

}  // namespace coopstore
