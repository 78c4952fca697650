#pragma once

#include <stdexcept>
#include <string>

namespace abelcone {

// Error categories surfaced through the C API as stable numeric codes.
enum class ErrorCode {
  Dimension = 1,       // mismatched ambient dimension / g
  Degree = 2,          // wrong degree for the requested operation
  Parse = 3,           // malformed input document
  Argument = 4,        // bad argument (empty grid, zero restarts, ...)
  Representation = 5,  // class outside the required span/basis
  Unsupported = 6,     // valid input outside the implemented range
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace abelcone
