#pragma once

#include <stdexcept>
#include <string>

namespace heun {

enum class ErrorCode {
  DuplicateAbscissa,
  NonpositiveCharge,
  DegreeZero,
  DegreeTooLarge,
  SpectrumNotReal,
  CountMismatch,
  TheoremViolation,
  Collision,
  NoConvergence,
  LabelMismatch,
  DegreeMismatch,
  IndexOutOfRange,
  BadExponent,
  EmptySample,
  OutOfSupport,
  OutOfRange,
  ShortSequence,
  ParseError,
  InvalidArgument,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::NonpositiveCharge: return "NonpositiveCharge";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::SpectrumNotReal: return "SpectrumNotReal";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::Collision: return "Collision";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ShortSequence: return "ShortSequence";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace heun
