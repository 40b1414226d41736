#pragma once

#include <stdexcept>
#include <string>

namespace envelope {

enum class ErrorCode {
  DimensionMismatch,
  CompositeNotZero,
  QuotientNotPreserved,
  NotAPermutation,
  MalformedPresentation,
  InvalidInput,
  NoUnit,
  ShapeMismatch,
  ParseError,
  ValidationError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace envelope
