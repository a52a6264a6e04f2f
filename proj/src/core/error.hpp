#pragma once

#include <stdexcept>
#include <string>

namespace graphmfd {

// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  parse,        // malformed manifest text
  invalid,      // structural invariant or precondition violated
  unsupported,  // instance outside the exact-computation envelope
  internal,     // cross-check failure; indicates a bug, never expected
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphmfd
