#pragma once

#include "twophoton/errors.hpp"
#include "twophoton/scalar.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace twophoton {

/// Truncated Laurent series Σ c_k t^k. Coefficients are stored from exponent
/// `valuation()` and are known exactly for every exponent < `precision()`.
template <class T> class Series {
public:
  Series(int valuation, std::vector<T> coeffs)
      : valuation_(valuation), coeffs_(std::move(coeffs)) {}

  /// Polynomial / power series starting at t^0.
  explicit Series(std::vector<T> coeffs) : Series(0, std::move(coeffs)) {}

  static Series zero(int precision) {
    return Series(0, std::vector<T>(static_cast<std::size_t>(std::max(precision, 0))));
  }

  int valuation() const { return valuation_; }
  int precision() const { return valuation_ + static_cast<int>(coeffs_.size()); }

  T coeff(int exponent) const {
    if (exponent >= precision())
      throw DomainError("series coefficient t^" + std::to_string(exponent) +
                        " beyond truncation order");
    if (exponent < valuation_)
      return T(0);
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
  }

  /// Exponent of the first nonzero coefficient, or precision() if none.
  int order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!is_zero(coeffs_[k]))
        return valuation_ + static_cast<int>(k);
    return precision();
  }

  bool has_negative_powers() const { return order() < 0; }

  /// Coefficients of t^0 .. t^{n-1}; the series must be regular at 0.
  std::vector<T> regular(std::size_t n) const {
    if (has_negative_powers())
      throw DomainError("series has a pole at 0 (first term t^" +
                        std::to_string(order()) + ")");
    std::vector<T> out(n);
    for (std::size_t k = 0; k < n; ++k)
      out[k] = coeff(static_cast<int>(k));
    return out;
  }

  /// Multiplies by t^k.
  Series shifted(int k) const { return Series(valuation_ + k, coeffs_); }

  /// f(t) ↦ f(t²).
  Series of_square() const {
    std::vector<T> c(2 * coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      c[2 * k] = coeffs_[k];
    return Series(2 * valuation_, std::move(c));
  }

  friend Series operator+(const Series &x, const Series &y) {
    int v = std::min(x.valuation_, y.valuation_);
    int p = std::min(x.precision(), y.precision());
    std::vector<T> c(static_cast<std::size_t>(std::max(p - v, 0)));
    for (int e = v; e < p; ++e)
      c[static_cast<std::size_t>(e - v)] = x.coeff(e) + y.coeff(e);
    return Series(v, std::move(c));
  }
  friend Series operator-(const Series &x, const Series &y) { return x + y * T(-1); }

  friend Series operator*(const Series &x, const T &s) {
    Series r = x;
    for (auto &c : r.coeffs_)
      c *= s;
    return r;
  }

  friend Series operator*(const Series &x, const Series &y) {
    int v = x.valuation_ + y.valuation_;
    int p = std::min(x.precision() + y.valuation_, y.precision() + x.valuation_);
    std::vector<T> c(static_cast<std::size_t>(std::max(p - v, 0)));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (is_zero(x.coeffs_[i]))
        continue;
      for (std::size_t j = 0; j < y.coeffs_.size() && i + j < c.size(); ++j)
        if (!is_zero(y.coeffs_[j]))
          c[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Series(v, std::move(c));
  }

  /// Square root on the branch whose leading coefficient is +1. The leading
  /// term must be exactly t^{2m}.
  Series sqrt() const {
    int e = order();
    if (e >= precision())
      throw DomainError("square root of a series with no known nonzero term");
    if (e % 2 != 0)
      throw DomainError("square root of a series with odd leading power");
    if (!(coeff(e) == T(1)))
      throw DomainError("square root needs leading coefficient 1");
    const std::size_t n = static_cast<std::size_t>(precision() - e);
    std::vector<T> u(n), h(n);
    for (std::size_t k = 0; k < n; ++k)
      u[k] = coeff(e + static_cast<int>(k));
    h[0] = T(1);
    for (std::size_t k = 1; k < n; ++k) {
      T acc = u[k];
      for (std::size_t j = 1; j < k; ++j)
        acc -= h[j] * h[k - j];
      h[k] = acc / T(2);
    }
    return Series(e / 2, std::move(h));
  }

private:
  int valuation_;
  std::vector<T> coeffs_;
};

/// Taylor expansions of the operator functions used by the deformed
/// realizations. `n` is the number of coefficients (t^0..t^{n-1}) required.
namespace taylor {

/// e^{c t}
template <class T> Series<T> exp(const T &c, std::size_t n) {
  std::vector<T> out(n);
  T term(1);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = term;
    term = term * c / T(static_cast<long>(k + 1));
  }
  return Series<T>(std::move(out));
}

/// (e^{c t} − 1)/c, regular in c: Σ_{k≥1} c^{k−1} t^k / k!
template <class T> Series<T> expm1_over(const T &c, std::size_t n) {
  std::vector<T> out(n);
  T term(1);
  for (std::size_t k = 1; k < n; ++k) {
    out[k] = term / T(static_cast<long>(k));
    term = term * c / T(static_cast<long>(k));
  }
  return Series<T>(std::move(out));
}

/// (1 − e^{−c t})/c = Σ_{k≥1} (−1)^{k+1} c^{k−1} t^k / k!
template <class T> Series<T> one_minus_exp_neg_over(const T &c, std::size_t n) {
  return expm1_over(T(-1) * c, n);
}

/// ((1 − e^{−a t})/a)²
template <class T> Series<T> ua1_bp(const T &a, std::size_t n) {
  auto u = one_minus_exp_neg_over(a, n);
  return u * u;
}

/// (e^{2a t²} − 1)/(2a t): the ua2 number-operator coefficient, from the
/// Laurent form with t^{-1}.
template <class T> Series<T> ua2_n(const T &a, std::size_t n) {
  return expm1_over(T(2) * a, n + 2).of_square().shifted(-1);
}

/// ((1 − e^{−2a t²})/(2a))^{1/2}, branch +t near 0.
template <class T> Series<T> ua2_ap(const T &a, std::size_t n) {
  return one_minus_exp_neg_over(T(2) * a, n + 2).of_square().sqrt();
}

/// (e^{2a t²}/t)·((1 − e^{−2a t²})/(2a))^{1/2}
template <class T> Series<T> ua2_am(const T &a, std::size_t n) {
  return (exp(T(2) * a, n + 2).of_square() * ua2_ap(a, n + 2)).shifted(-1);
}

/// (e^{2a t²} − 1)/(2a t²): coefficient of the second-derivative part of B-.
template <class T> Series<T> ua2_bm2(const T &a, std::size_t n) {
  return expm1_over(T(2) * a, n + 2).of_square().shifted(-2);
}

/// e^{2a t²}/t + (1 − e^{2a t²})/(2a t³): coefficient of the first-derivative
/// part of B-. Each term alone has a t^{-1} pole; the sum does not.
template <class T> Series<T> ua2_bm1(const T &a, std::size_t n) {
  auto first = exp(T(2) * a, n + 4).of_square().shifted(-1);
  auto second = (expm1_over(T(2) * a, n + 4) * T(-1)).of_square().shifted(-3);
  return first + second;
}

} // namespace taylor

} // namespace twophoton
