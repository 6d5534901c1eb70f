#pragma once

#include <stdexcept>
#include <string>

namespace twophoton {

/// Arithmetic or structural misuse: mismatched variable sets, division by a
/// non-constant scalar, non-nilpotent input to a nilpotent series, ...
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// A family constructor received parameters violating one of its defining
/// relations or inequations.
class ConstraintError : public std::invalid_argument {
public:
  explicit ConstraintError(const std::string &what)
      : std::invalid_argument(what) {}
};

/// An identity that must hold exactly did not.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string &what)
      : std::runtime_error(what) {}
};

/// Malformed textual / JSON input.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace twophoton
