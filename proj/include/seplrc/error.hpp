#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seplrc {

enum class ErrorKind {
  NotPrime,
  Reducible,
  FieldTooLarge,
  InvalidArgument,
  DivisionByZero,
  ZeroPolynomial,
  DegreesNotCoprime,
  DegreeTooSmall,
  InvalidSpace,
  UncertifiedSemigroup,
  UncertifiedGonality,
  NoSplitFibres,
  FibreNotSplit,
  LengthMismatch,
  WorkCapExceeded,
  Ambiguous,
  Inconsistent,
  DuplicateAbscissa,
  MissingSymbol,
  NotApplicable,
  RepairMismatch,
  LayoutInfeasible,
  Config,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace seplrc
