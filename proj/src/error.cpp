#include "gri/error.hpp"

namespace gri {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidTable: return "invalid-table";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnknownGenerator: return "unknown-generator";
    case ErrorCode::CosetLimitExceeded: return "coset-limit-exceeded";
    case ErrorCode::NotSLC: return "not-slc";
    case ErrorCode::InvalidInvolution: return "invalid-involution";
    case ErrorCode::InvalidOrientation: return "invalid-orientation";
    case ErrorCode::IncompatibleConfig: return "incompatible-config";
    case ErrorCode::CharTwoRing: return "char-two-ring";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::MismatchedCarrier: return "mismatched-carrier";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace gri
