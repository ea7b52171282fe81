#include "prolong/error.hpp"

namespace prolong {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IdenticallyZeroDenominator: return "IdenticallyZeroDenominator";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::TInQField: return "TInQField";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TransferNotFunctional: return "TransferNotFunctional";
    case ErrorCode::CocycleViolation: return "CocycleViolation";
    case ErrorCode::ChartIncompatibility: return "ChartIncompatibility";
    case ErrorCode::IndeterminateOnVariety: return "IndeterminateOnVariety";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::DenominatorVanishesAtInitialPoint: return "DenominatorVanishesAtInitialPoint";
    case ErrorCode::ModelError: return "ModelError";
  }
  return "Unknown";
}

}  // namespace prolong
