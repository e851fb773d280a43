#pragma once

#include <stdexcept>
#include <string>

namespace orb {

// Every recoverable failure in the library is reported through Error with a
// stable machine-readable code.  Codes mirror the documented error conditions
// of the individual operations; anything not listed here is a programming
// error and is reported via Internal.
enum class ErrorCode {
  // exact algebra
  MixedRadicands,
  NotSquare,
  IrreducibleCubicOrWorse,
  NonRealQuadratic,
  // permutations / groups
  DegreeMismatch,
  CapExceeded,
  NotTransitive,
  NoElementOfOrderP,
  PSquaredDividesOrder,
  // scheme machinery
  InconsistentRepresentatives,
  NonCommutative,
  NonIntegerMultiplicity,
  SubdegreeOne,
  NotClosedUnderPairing,
  // feasibility / scanning
  BoundExceeded,
  NonCommutativeCase,
  // fixtures
  DegreeTooSmall,
  UnsupportedField,
  NotASubgroup,
  IndexTooLarge,
  NotFound,
  NotClosed,
  // i/o and invariants
  BadInput,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Internal invariant check: unlike assert, always active, and reports through
// the Error channel so the CLI can map it to its dedicated exit code.
inline void require_internal(bool ok, const std::string& message) {
  if (!ok) fail(ErrorCode::Internal, message);
}

}  // namespace orb
