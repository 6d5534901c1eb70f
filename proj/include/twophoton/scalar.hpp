#pragma once

#include "twophoton/polynomial.hpp"
#include "twophoton/rational.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace twophoton {

/// Exact scalar: a rational number or a polynomial over a declared variable
/// set. Rationals mix freely with polynomials (as constants); two polynomials
/// must share their variable set.
class Scalar {
public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational q) : value_(std::move(q)) {}
  Scalar(Polynomial p) : value_(std::move(p)) {}

  static Scalar variable(const VarSetPtr &vars, const std::string &name) {
    return Scalar(Polynomial::variable(vars, name));
  }

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(value_); }
  const Polynomial *polynomial() const { return std::get_if<Polynomial>(&value_); }
  /// Null for a plain rational.
  VarSetPtr vars() const;

  bool is_zero() const;
  bool is_constant() const;
  /// Value of a constant scalar; DomainError for a non-constant polynomial.
  Rational to_rational() const;
  /// Promotes to a polynomial over `vars`.
  Polynomial to_polynomial(const VarSetPtr &vars) const;

  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  /// Divisor must be a nonzero constant.
  Scalar &operator/=(const Scalar &o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar &y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar &y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar &y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar &y) { return x /= y; }

  /// Mathematical equality (a constant polynomial equals its rational value).
  friend bool operator==(const Scalar &x, const Scalar &y);

  /// Evaluates polynomial scalars at a point of their variable set.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

private:
  std::variant<Rational, Polynomial> value_;
};

inline bool is_zero(const Scalar &s) { return s.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

/// Parses "p/q", decimals, or a polynomial expression in the variables of
/// `vars` using + - * / ^ and parentheses. Division is by constants only.
/// Expressions without variables come back as plain rationals.
Scalar parse_scalar(std::string_view text, const VarSetPtr &vars = nullptr);

} // namespace twophoton
