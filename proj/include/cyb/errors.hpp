#pragma once

#include <stdexcept>
#include <string>

namespace cyb {

// Machine-readable failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  kDomain,          // operation undefined for its arguments (zero gcd inputs, zero point, ...)
  kInvalidSpec,     // malformed bundle data (wrong rank, unsupported base)
  kOracleMismatch,  // a closed form disagreed with its independent computation
  kInadmissible,    // spec outside the range where the result is defined (b-a > 4, rho != 2)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string reason, const std::string& message)
      : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorKind kind_;
  std::string reason_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message, std::string reason = "domain_error")
      : Error(ErrorKind::kDomain, std::move(reason), message) {}
};

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(const std::string& message, std::string reason = "invalid_degrees")
      : Error(ErrorKind::kInvalidSpec, std::move(reason), message) {}
};

class OracleMismatch : public Error {
 public:
  explicit OracleMismatch(const std::string& message, std::string reason = "oracle_mismatch")
      : Error(ErrorKind::kOracleMismatch, std::move(reason), message) {}
};

class Inadmissible : public Error {
 public:
  explicit Inadmissible(const std::string& message, std::string reason = "inadmissible")
      : Error(ErrorKind::kInadmissible, std::move(reason), message) {}
};

}  // namespace cyb
