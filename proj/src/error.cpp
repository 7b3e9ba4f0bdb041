#include "seplrc/error.hpp"

namespace seplrc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreesNotCoprime: return "DegreesNotCoprime";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::UncertifiedSemigroup: return "UncertifiedSemigroup";
    case ErrorKind::UncertifiedGonality: return "UncertifiedGonality";
    case ErrorKind::NoSplitFibres: return "NoSplitFibres";
    case ErrorKind::FibreNotSplit: return "FibreNotSplit";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WorkCapExceeded: return "WorkCapExceeded";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::MissingSymbol: return "MissingSymbol";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::RepairMismatch: return "RepairMismatch";
    case ErrorKind::LayoutInfeasible: return "LayoutInfeasible";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace seplrc
