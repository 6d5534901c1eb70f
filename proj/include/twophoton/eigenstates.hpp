#pragma once

#include "twophoton/fockrep.hpp"
#include "twophoton/series.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace twophoton {

/// (β1 N + β2 B- + β3 B+ + β4 A- + β5 A+) f = λ f in a Bargmann realization.
/// T is Scalar (exact) or double.
template <class T> struct EigenProblem {
  RepKind kind = RepKind::Classical;
  T parameter{};
  std::array<T, 5> beta{};
  T lambda{};
  std::size_t order = 20;
};

/// p2 f'' + p1 f' + p0 f = 0 with λ folded into p0; each series holds the
/// Taylor coefficients of α^0..α^order.
template <class T> struct ODESpec {
  std::vector<T> p2, p1, p0;
  /// p2(0) ≠ 0
  bool ordinary = false;
};

template <class T> struct SeriesSolution {
  std::vector<T> coeffs; // c_0..c_n
  /// Coefficients of α^0..α^{n-2} (α^0..α^{n-1} for first-order problems)
  /// of the ODE applied to the truncated series.
  std::vector<T> residual;
  /// max |residual_k| / max |term| in float mode; 0 or 1 in exact mode.
  double residual_norm = 0;
  T c0{}, c1{};
  bool first_order = false;
};

namespace detail {

template <class T> std::vector<T> padded(const Series<T> &s, std::size_t n) {
  return s.regular(n);
}

template <class T> std::vector<T> poly(std::initializer_list<T> c, std::size_t n) {
  std::vector<T> out(n, T(0));
  std::size_t k = 0;
  for (const auto &x : c) {
    if (k < n)
      out[k] = x;
    ++k;
  }
  return out;
}

template <class T> void axpy(std::vector<T> &y, const T &a, const std::vector<T> &x) {
  if (is_zero(a))
    return;
  for (std::size_t k = 0; k < y.size(); ++k)
    y[k] += a * x[k];
}

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Scalar &x) { return x.is_zero() ? 0.0 : 1.0; }

} // namespace detail

template <class T> ODESpec<T> ode_from_problem(const EigenProblem<T> &p) {
  if (p.order < 4)
    throw DomainError("eigenstate order must be at least 4");
  const std::size_t n = p.order + 1;
  const auto &b = p.beta;
  const T &a = p.parameter;
  ODESpec<T> s{std::vector<T>(n, T(0)), std::vector<T>(n, T(0)), std::vector<T>(n, T(0))};
  using detail::axpy;
  using detail::padded;
  using detail::poly;
  switch (p.kind) {
  case RepKind::Classical:
    s.p2 = poly<T>({b[1]}, n);
    s.p1 = poly<T>({b[3], b[0]}, n);
    s.p0 = poly<T>({T(-1) * p.lambda, b[4], b[2]}, n);
    break;
  case RepKind::Ua1:
    axpy(s.p2, b[1], padded(taylor::exp(a, n), n));
    axpy(s.p1, b[0], padded(taylor::expm1_over(a, n), n));
    axpy(s.p1, b[3], padded(taylor::exp(a, n), n));
    axpy(s.p0, b[2], padded(taylor::ua1_bp(a, n), n));
    axpy(s.p0, b[4], poly<T>({T(0), T(1)}, n));
    axpy(s.p0, T(-1) * p.lambda, poly<T>({T(1)}, n));
    break;
  case RepKind::Ua2:
    axpy(s.p2, b[1], padded(taylor::ua2_bm2(a, n), n));
    axpy(s.p1, b[0], padded(taylor::ua2_n(a, n), n));
    axpy(s.p1, b[3], padded(taylor::ua2_am(a, n), n));
    axpy(s.p1, b[1], padded(taylor::ua2_bm1(a, n), n));
    axpy(s.p0, b[2], poly<T>({T(0), T(0), T(1)}, n));
    axpy(s.p0, b[4], padded(taylor::ua2_ap(a, n), n));
    axpy(s.p0, T(-1) * p.lambda, poly<T>({T(1)}, n));
    break;
  }
  s.ordinary = !is_zero(s.p2[0]);
  return s;
}

/// Coefficient of α^k in p2 f'' + p1 f' + p0 f for f = Σ c_m α^m, using the
/// available coefficients only. Also returns the largest term magnitude.
template <class T>
std::pair<T, double> ode_coefficient(const ODESpec<T> &s, const std::vector<T> &c, std::size_t k) {
  T acc(0);
  double scale = 0;
  auto term = [&](const T &x) {
    if (is_zero(x))
      return;
    scale = std::max(scale, detail::magnitude(x));
    acc += x;
  };
  auto at = [&c](std::size_t m) { return m < c.size() ? c[m] : T(0); };
  for (std::size_t j = 0; j <= k && j < s.p0.size(); ++j) {
    const std::size_t m = k - j;
    term(s.p2[j] * T(static_cast<long>((m + 2) * (m + 1))) * at(m + 2));
    term(s.p1[j] * T(static_cast<long>(m + 1)) * at(m + 1));
    term(s.p0[j] * at(m));
  }
  return {acc, scale};
}

/// Cauchy-product recurrence at the ordinary point α = 0. With p2 ≡ 0 and
/// p1(0) ≠ 0 the problem is first order and c1 is ignored. Any other
/// p2(0) = 0 case is a singular point and raises DomainError.
template <class T>
SeriesSolution<T> solve_series(const ODESpec<T> &s, const T &c0, const T &c1, std::size_t n) {
  if (n < 2 || s.p2.size() < n + 1 || s.p1.size() < n + 1 || s.p0.size() < n + 1)
    throw DomainError("ODE series shorter than the requested order " + std::to_string(n));
  bool p2_zero = true;
  for (const auto &x : s.p2)
    p2_zero = p2_zero && is_zero(x);
  SeriesSolution<T> sol;
  sol.c0 = c0;
  sol.c1 = c1;
  sol.coeffs.assign(n + 1, T(0));
  sol.coeffs[0] = c0;
  std::size_t equations;
  if (!p2_zero) {
    if (is_zero(s.p2[0]))
      throw DomainError("alpha = 0 is a singular point of the ODE (p2(0) = 0)");
    sol.coeffs[1] = c1;
    // α^k fixes c_{k+2}; the unknown enters with p2(0)(k+2)(k+1).
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      T rest = ode_coefficient(s, sol.coeffs, k).first;
      sol.coeffs[k + 2] = T(-1) * rest / (s.p2[0] * T(static_cast<long>((k + 2) * (k + 1))));
    }
    equations = n - 1;
  } else {
    if (is_zero(s.p1[0]))
      throw DomainError("alpha = 0 is a singular point of the first-order ODE (p1(0) = 0)");
    sol.first_order = true;
    sol.c1 = T(0);
    for (std::size_t k = 0; k + 1 <= n; ++k) {
      T rest = ode_coefficient(s, sol.coeffs, k).first;
      sol.coeffs[k + 1] = T(-1) * rest / (s.p1[0] * T(static_cast<long>(k + 1)));
    }
    equations = n;
  }
  for (std::size_t k = 0; k < equations; ++k) {
    auto [r, scale] = ode_coefficient(s, sol.coeffs, k);
    sol.residual.push_back(r);
    if (scale > 0)
      sol.residual_norm = std::max(sol.residual_norm, detail::magnitude(r) / scale);
  }
  return sol;
}

/// H = β1 N + β2 B- + β3 B+ + β4 A- + β5 A+ from the matching truncated
/// representation at dimension `dim`.
ScalarMatrix eigen_operator(const EigenProblem<Scalar> &p, std::size_t dim);

/// Applies H − λ to the coefficient vector in the monomial basis and asserts
/// rows 0..n−2 vanish exactly. Needs dim ≥ n + 4.
VerificationReport matrix_residual(const EigenProblem<Scalar> &p,
                                   const std::vector<Scalar> &coeffs, std::size_t dim);

} // namespace twophoton
