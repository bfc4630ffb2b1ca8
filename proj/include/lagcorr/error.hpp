#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagcorr {

enum class ErrorCode {
  DivisionByZero,
  InfiniteSupport,
  InsufficientTerms,
  InvalidPartition,
  MismatchedWeight,
  ObjectMismatch,
  UnknownComposition,
  NoAdjoint,
  NotDivisible,
  ZeroVector,
  DegeneratePair,
  InvalidCurveClass,
  IncompatibleContact,
  CutoffMismatch,
  NonUnitalLog,
  ConstantTermInExp,
  ValuationBound,
  MissingPairing,
  LevelMismatch,
  Overflow,
  Parse,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lagcorr
