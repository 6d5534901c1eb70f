#pragma once

#include "twophoton/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twophoton {

/// Ordered list of variable names a polynomial ring is built over.
class VarSet {
public:
  explicit VarSet(std::vector<std::string> names);

  /// The fifteen bialgebra parameters a1..a6, b1..b6, c1..c3.
  static std::shared_ptr<const VarSet> bialgebra();
  static std::shared_ptr<const VarSet> single(const std::string &name);

  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const { return names_; }
  std::optional<std::size_t> index(const std::string &name) const;

  friend bool operator==(const VarSet &, const VarSet &) = default;

private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

bool same_vars(const VarSetPtr &x, const VarSetPtr &y);

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponents &x, const Exponents &y) const;
};

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored; operands must share a variable set.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(VarSetPtr vars);
  Polynomial(VarSetPtr vars, const Rational &constant);

  static Polynomial variable(VarSetPtr vars, std::size_t index);
  static Polynomial variable(VarSetPtr vars, const std::string &name);

  const VarSetPtr &vars() const { return vars_; }
  const TermMap &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned total_degree() const;
  Rational coefficient(const Exponents &e) const;

  /// Coefficient of var^k viewed as a polynomial in the remaining variables.
  Polynomial coefficient_of(std::size_t var, unsigned k) const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  Polynomial &operator*=(const Rational &q);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial x, const Polynomial &y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial &y) { return x -= y; }
  friend Polynomial operator*(const Polynomial &x, const Polynomial &y);
  friend Polynomial operator*(Polynomial x, const Rational &q) { return x *= q; }

  /// Structural equality; the variable sets must agree.
  friend bool operator==(const Polynomial &x, const Polynomial &y);

  /// Terms in descending graded-lex order, e.g. "2/1*a1*b3 - 1/1*c2^2".
  std::string to_string() const;

private:
  void check_vars(const Polynomial &o) const;
  void add_term(const Exponents &e, const Rational &c);

  VarSetPtr vars_;
  TermMap terms_;
};

} // namespace twophoton
