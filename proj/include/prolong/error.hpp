#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prolong {

enum class ErrorCode {
  DivisionByZero,
  ArityMismatch,
  IndexOutOfRange,
  IdenticallyZeroDenominator,
  DenominatorVanishes,
  SyntaxError,
  UnknownVariable,
  TInQField,
  NotPolynomial,
  DegreeCapExceeded,
  PointNotOnVariety,
  NoSolution,
  TransferNotFunctional,
  CocycleViolation,
  ChartIncompatibility,
  IndeterminateOnVariety,
  NonUnitConstantTerm,
  DenominatorVanishesAtInitialPoint,
  ModelError,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Syntax error carrying the byte offset into the source text.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace prolong
