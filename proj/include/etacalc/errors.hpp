#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace etacalc {

// Base of every error thrown by the library.  `kind()` is the stable,
// machine-readable name surfaced in reports and used for exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Input-record or manifest validation failures.  The CLI maps these to
// exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct SchemaError final : ValidationError {
  explicit SchemaError(const std::string& msg)
      : ValidationError("SchemaError", msg) {}
};

struct RiemannRochViolation final : ValidationError {
  explicit RiemannRochViolation(const std::string& msg)
      : ValidationError("RiemannRochViolation", msg) {}
};

struct CliffordViolation final : ValidationError {
  explicit CliffordViolation(const std::string& msg)
      : ValidationError("CliffordViolation", msg) {}
};

// Domain errors: the inputs are well-formed records but outside an
// operation's domain.  The CLI maps these to exit code 3.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}

 protected:
  DomainError(std::string kind, const std::string& msg)
      : Error(std::move(kind), msg) {}
};

struct DivisionByZero final : DomainError {
  explicit DivisionByZero(const std::string& msg)
      : DomainError("DivisionByZero", msg) {}
};

struct NegativeValuation final : DomainError {
  explicit NegativeValuation(const std::string& msg)
      : DomainError("NegativeValuation", msg) {}
};

struct TrivialBundle final : DomainError {
  explicit TrivialBundle(const std::string& msg)
      : DomainError("TrivialBundle", msg) {}
};

struct UnsupportedSign final : DomainError {
  explicit UnsupportedSign(const std::string& msg)
      : DomainError("UnsupportedSign", msg) {}
};

struct ResidueOutOfRange final : DomainError {
  explicit ResidueOutOfRange(const std::string& msg)
      : DomainError("ResidueOutOfRange", msg) {}
};

struct DegenerateReducible final : DomainError {
  explicit DegenerateReducible(const std::string& msg)
      : DomainError("DegenerateReducible", msg) {}
};

struct InvalidModuli final : DomainError {
  explicit InvalidModuli(const std::string& msg)
      : DomainError("InvalidModuli", msg) {}
};

struct ReducibleEndPresent final : DomainError {
  explicit ReducibleEndPresent(const std::string& msg)
      : DomainError("ReducibleEndPresent", msg) {}
};

struct MultipleEndsUnsupported final : DomainError {
  explicit MultipleEndsUnsupported(const std::string& msg)
      : DomainError("MultipleEndsUnsupported", msg) {}
};

// Raised when a closed form and the pipeline that is supposed to reproduce
// it disagree.  Must never fire on a correct build.
struct AssemblyMismatch final : DomainError {
  explicit AssemblyMismatch(const std::string& msg)
      : DomainError("AssemblyMismatch", msg) {}
};

}  // namespace etacalc
