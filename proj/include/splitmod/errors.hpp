#pragma once

#include <stdexcept>
#include <string>

namespace splitmod {

enum class ErrorKind {
  NotInvertible,
  NotAField,
  NotDirectSummand,
  AmbientMismatch,
  Singular,
  NotLocalizable,
  BadDimension,
  BadParameters,
  NotInTLambda,
  RelationViolated,
  ParityViolated,
  InvalidPoint,
  RingUnsupported,
  BudgetExceeded,
  BadTargets,
  ConstructionFailed,
  BadLabel,
  NotInZ,
  NotInGrassmannian,
  UnrecognizedType,
  ParseError,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splitmod
