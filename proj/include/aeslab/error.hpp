#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aeslab {

enum class ErrorKind {
  InvalidKey,
  InvalidInput,
  InvalidNonce,
  MessageTooLong,
  ModeMismatch,
  Padding,
  AuthenticationFailed,
  Domain,
  Format,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Padding and authentication failures, as opposed to misuse or I/O.
  bool is_cryptographic_failure() const noexcept {
    return kind_ == ErrorKind::Padding || kind_ == ErrorKind::AuthenticationFailed;
  }

 private:
  ErrorKind kind_;
};

}  // namespace aeslab
