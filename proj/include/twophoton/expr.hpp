#pragma once

#include "twophoton/lie.hpp"
#include "twophoton/matrix.hpp"
#include "twophoton/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace twophoton {

/// Taylor coefficients c_0.. of an analytic function, with a label.
struct OperatorSeries {
  std::vector<Scalar> coeffs;
  std::string label;
};

/// Produces the first n coefficients of a fixed function.
using SeriesFactory = std::function<OperatorSeries(std::size_t n)>;

/// Σ c_k A^k for a strictly lower-triangular A. Missing coefficients count
/// as zero. DomainError if A is not strictly lower triangular.
ScalarMatrix nilpotent_series(const OperatorSeries &f, const ScalarMatrix &a);

namespace functions {
SeriesFactory exp(const Scalar &c);                    // e^{c t}
SeriesFactory expm1_over(const Scalar &c);             // (e^{c t} − 1)/c
SeriesFactory one_minus_exp_neg_over(const Scalar &c); // (1 − e^{−c t})/c
} // namespace functions

/// Element of the (deformed) universal enveloping algebra, as an expression
/// tree over the generators. Trees are immutable and shared.
class Expr {
public:
  enum class Kind { Generator, Identity, Sum, Product, Scaled, Function };

  static Expr gen(Generator g);
  static Expr one();
  /// f(inner) for an analytic f given by its Taylor series.
  static Expr apply(SeriesFactory f, std::string label, Expr inner);

  Kind kind() const;
  Generator generator() const;
  const Scalar &scale() const;
  const std::vector<Expr> &children() const;
  const SeriesFactory &function() const;

  friend Expr operator+(const Expr &x, const Expr &y);
  friend Expr operator-(const Expr &x, const Expr &y);
  /// Ordered (noncommutative) product.
  friend Expr operator*(const Expr &x, const Expr &y);
  friend Expr operator*(const Scalar &s, const Expr &x);

  std::string to_string() const;

private:
  struct Node;
  static Expr combine(Kind kind, const Expr &x, const Expr &y);
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// e^{c X}
Expr exp_of(const Scalar &c, Generator x);

/// Evaluates an expression given the matrices of the generators on a space of
/// dimension `dim`. Function nodes go through nilpotent_series.
ScalarMatrix evaluate(const Expr &e, const std::function<const ScalarMatrix &(Generator)> &gen,
                      std::size_t dim);

} // namespace twophoton
