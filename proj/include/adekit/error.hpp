#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace adekit {

// Bad user input: malformed DSL, violated preconditions, unsupported types.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal consistency check failed (orthogonality residual, root count
// mismatch, ...). Signals a bug or numeric breakdown, not bad input.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sign of a floating quantity could not be certified.
class NumericIndeterminacy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its cap.
class EnumerationLimit : public InputError {
 public:
  using InputError::InputError;
};

/// Enumeration cap, overridable through the ADEKIT_MAX_ENUM environment
/// variable (a positive decimal integer).
inline std::size_t enumeration_cap(std::size_t fallback) {
  if (const char* env = std::getenv("ADEKIT_MAX_ENUM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

}  // namespace adekit
