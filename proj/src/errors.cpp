#include "splitmod/errors.hpp"

namespace splitmod {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotDirectSummand: return "NotDirectSummand";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotLocalizable: return "NotLocalizable";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotInTLambda: return "NotInTLambda";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::ParityViolated: return "ParityViolated";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::RingUnsupported: return "RingUnsupported";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadTargets: return "BadTargets";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::NotInZ: return "NotInZ";
    case ErrorKind::NotInGrassmannian: return "NotInGrassmannian";
    case ErrorKind::UnrecognizedType: return "UnrecognizedType";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace splitmod
