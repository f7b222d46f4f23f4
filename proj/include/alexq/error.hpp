#pragma once

#include <stdexcept>
#include <string>

namespace alexq {

enum class ErrorCode {
  Parse,             // malformed JSON text
  Schema,            // well-formed JSON that does not match the expected layout
  Invalid,           // well-formed input describing an object that fails validation
  Precondition,      // operation not applicable to this (valid) input
  Argument,          // bad scalar argument (radius, constant, label set)
  OutOfRange,        // point index, carrier size or subset bits out of range
  UniverseMismatch,  // operands live on different carriers
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace alexq
