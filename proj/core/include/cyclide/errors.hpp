#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclide {

enum class ErrorKind {
  ParseError,
  IoError,
  InvalidVector,
  PreconditionViolation,
  CubicInput,
  NotACubicCyclide,
  NoRealSolution,
  NonRationalSolution,
  ComponentMismatch,
  UndefinedInvariant,
  BothSidesDegenerate,
  EmptySurface,
};

std::string_view to_string(ErrorKind kind);

// Named exact quantities attached to an error, e.g. the discriminant that
// made a solve fail or the residuals that rejected a component test.
using ErrorDetails = std::vector<std::pair<std::string, mpq_class>>;

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message, ErrorDetails details = {})
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const ErrorDetails& details() const noexcept { return details_; }

 private:
  ErrorKind kind_;
  ErrorDetails details_;
};

}  // namespace cyclide
