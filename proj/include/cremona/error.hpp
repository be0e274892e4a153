#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
  ZeroInverse,
  ArityMismatch,
  DegreeMismatch,
  SingularChange,
  ZeroPolynomial,
  BothConstant,
  BadLeadingCoefficient,
  CommonComponent,
  ZeroForm,
  BothZero,
  InvalidArgument,
  GenericityExhausted,
  InvalidConfiguration,
  EmptyLinearSystem,
  IrreducibilityFailure,
  MultiplicityFailure,
  FixedComponent,
  HomaloidalFailure,
  OutOfRange,
  CriterionViolation,
  BidegreeMismatch,
  ForgeExhausted,
  MalformedCertificate,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cremona
