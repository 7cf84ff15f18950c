#pragma once

#include <stdexcept>
#include <string>

namespace superkit {

enum class ErrorCode {
  DuplicateName,
  InvalidDeclaration,
  ContextMismatch,
  ParityViolation,
  InvalidTarget,
  InvalidMeasure,
  UnsupportedArgument,
  NonInvertible,
  SingularBlock,
  ParityUndetermined,
  InvalidParameter,
  UnsupportedChart,
  DegenerateDistribution,
  NotAuxiliary,
  CbhOrderUnsupported,
  BracketVerificationFailure,
  DimensionMismatch,
  RepresentationIncompatible,
  ParseError,
  SemanticError,
  UnknownSuite,
  IoError,
  Internal,
};

const char* to_string(ErrorCode c);

/// Exception carrying a machine-readable error code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace superkit
