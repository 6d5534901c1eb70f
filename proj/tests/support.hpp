#pragma once

#include "twophoton/bialgebra.hpp"
#include "twophoton/eigenstates.hpp"
#include "twophoton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <set>

#include <random>

namespace testing_support {

using namespace twophoton;
using G = Generator;

/// Nonzero-denominator rationals with small numerators; fixed seeds keep the
/// draws reproducible.
class RationalDraw {
public:
  explicit RationalDraw(std::uint64_t seed) : rng_(seed) {}

  Rational any(long range = 9, long max_den = 6) {
    std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
    return make_rational(num(rng_), den(rng_));
  }
  Rational nonzero(long range = 9, long max_den = 6) {
    Rational q;
    do
      q = any(range, max_den);
    while (q == 0);
    return q;
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

private:
  std::mt19937_64 rng_;
};

/// A fifteen-parameter symbol, as a polynomial scalar.
inline Scalar sym(const std::string &name) { return Scalar::variable(VarSet::bialgebra(), name); }

inline LieElement gen(G g) { return LieElement::basis(g); }

inline TensorElement w(G x, G y) { return wedge(x, y); }

// The general cocommutator table, written out term by term.
inline TensorElement transcribed_general(G g) {
  const Scalar a1 = sym("a1"), a2 = sym("a2"), a3 = sym("a3"), a4 = sym("a4"), a5 = sym("a5"),
               a6 = sym("a6"), b1 = sym("b1"), b2 = sym("b2"), b3 = sym("b3"), b4 = sym("b4"),
               b5 = sym("b5"), b6 = sym("b6"), c1 = sym("c1"), c2 = sym("c2"), c3 = sym("c3");
  const Scalar two(2), three(3), four(4);
  switch (g) {
  case G::N:
    return a1 * w(G::N, G::Ap) + two * a2 * w(G::N, G::Bp) + a3 * w(G::Ap, G::M) +
           two * a4 * w(G::Bp, G::M) + three * a5 * w(G::Ap, G::Bp) - b1 * w(G::N, G::Am) -
           two * b2 * w(G::N, G::Bm) - b3 * w(G::Am, G::M) - two * b4 * w(G::Bm, G::M) -
           three * b5 * w(G::Am, G::Bm) - a6 * w(G::Ap, G::Bm) + b6 * w(G::Am, G::Bp);
  case G::Ap:
    return (two * a6 + b1) * w(G::Am, G::Ap) + a2 * w(G::Bp, G::Ap) +
           b2 * (w(G::Bm, G::Ap) + two * w(G::Am, G::N)) - b1 * w(G::N, G::M) -
           two * b4 * w(G::Am, G::M) + b5 * w(G::Bm, G::M) + b6 * w(G::Bp, G::M) -
           (c1 + c2) * w(G::Ap, G::M) + two * c3 * w(G::Am, G::Bp);
  case G::Am:
    return Scalar(-1) * (two * b6 + a1) * w(G::Ap, G::Am) - b2 * w(G::Bm, G::Am) -
           a2 * (w(G::Bp, G::Am) + two * w(G::Ap, G::N)) + a1 * w(G::N, G::M) +
           two * a4 * w(G::Ap, G::M) - a5 * w(G::Bp, G::M) - a6 * w(G::Bm, G::M) +
           (c1 - c2) * w(G::Am, G::M) + two * c3 * w(G::Ap, G::Bm);
  case G::Bp:
    return four * c3 * w(G::N, G::Bp) + two * (a1 - b6) * w(G::Ap, G::Bp) +
           two * b1 * w(G::Am, G::Bp) + two * b2 * w(G::Bm, G::Bp) +
           two * (two * a6 - b1) * w(G::N, G::Ap) +
           two * b5 * (two * w(G::N, G::Am) - w(G::Ap, G::Bm) - w(G::Am, G::M)) -
           two * (b2 + two * b4) * w(G::N, G::M) - two * (a6 + b3) * w(G::Ap, G::M) -
           two * (c1 + c3) * w(G::Bp, G::M);
  case G::Bm:
    return four * c3 * w(G::N, G::Bm) - two * (b1 - a6) * w(G::Am, G::Bm) -
           two * a1 * w(G::Ap, G::Bm) - two * a2 * w(G::Bp, G::Bm) -
           two * (two * b6 - a1) * w(G::N, G::Am) -
           two * a5 * (two * w(G::N, G::Ap) - w(G::Am, G::Bp) - w(G::Ap, G::M)) +
           two * (a2 + two * a4) * w(G::N, G::M) + two * (b6 + a3) * w(G::Am, G::M) +
           two * (c1 - c3) * w(G::Bm, G::M);
  case G::M:
    return TensorElement(2);
  }
  return TensorElement(2);
}

inline BialgebraParams draw_family(FamilyKind kind, RationalDraw &d, bool on_locus) {
  std::map<std::string, Scalar> f;
  switch (kind) {
  case FamilyKind::TypeIStandard:
    f = {{"c1", Scalar(d.any())}, {"c2", Scalar(d.nonzero())}};
    break;
  case FamilyKind::TypeINonStandard:
    f = {{"c1", Scalar(d.any())}};
    break;
  case FamilyKind::TypeII: {
    const Scalar a1(d.nonzero()), a5(d.any()), c1(d.any());
    Scalar b3 = on_locus ? c1 * c1 / a1 : Scalar(d.any());
    if (!on_locus && a1 * b3 == c1 * c1)
      b3 += Scalar(1);
    f = {{"a1", a1}, {"a3", Scalar(d.any())}, {"a4", type_ii_a4(a1, a5, c1)},
         {"a5", a5}, {"b3", b3},                {"c1", c1}};
    break;
  }
  case FamilyKind::TypeIIIStandard: {
    const Scalar a2(d.any()), a3(d.any()), c2(d.nonzero());
    f = {{"a2", a2}, {"a3", a3}, {"a4", Scalar(d.any())}, {"a5", type_iii_a5(a2, a3, c2)},
         {"c2", c2}};
    break;
  }
  case FamilyKind::TypeIIINonStandard:
    f = {{"a2", Scalar(d.any())}, {"a4", Scalar(d.any())}, {"a5", Scalar(d.any())}};
    break;
  }
  return family(kind, f);
}

inline const std::array<FamilyKind, 5> kFamilies = {
    FamilyKind::TypeIStandard, FamilyKind::TypeINonStandard, FamilyKind::TypeII,
    FamilyKind::TypeIIIStandard, FamilyKind::TypeIIINonStandard};

/// Random eigenproblem at order 20 with β2 ≠ 0, or β2 = 0 and β4 ≠ 0 when
/// `first_order`.
inline EigenProblem<Scalar> random_problem(RepKind kind, RationalDraw &draw, bool first_order) {
  EigenProblem<Scalar> p;
  p.kind = kind;
  p.parameter = Scalar(draw.nonzero());
  for (auto &b : p.beta)
    b = Scalar(draw.any());
  if (first_order) {
    p.beta[1] = Scalar(0);
    p.beta[3] = Scalar(draw.nonzero());
  } else {
    p.beta[1] = Scalar(draw.nonzero());
  }
  p.lambda = Scalar(draw.any());
  p.order = 20;
  return p;
}

/// Nonzero entries <n|X|m> of column m in the number basis, from the closed
/// forms of the classical and ua1 actions. Terms past `dim` are dropped.
inline std::vector<std::pair<int, double>> number_state_column(RepKind kind, G g, double a,
                                                                int m, int dim) {
  auto fact = [](int n) { return std::exp(std::lgamma(n + 1.0)); };
  auto root = [](int hi, int lo) {
    return std::exp(0.5 * (std::lgamma(hi + 1.0) - std::lgamma(lo + 1.0)));
  };
  const bool deformed = kind == RepKind::Ua1;
  std::vector<std::pair<int, double>> c;
  switch (g) {
  case G::N:
    c.push_back({m, double(m)});
    for (int k = 1; deformed && m + k < dim; ++k)
      c.push_back({m + k, m * std::pow(a, k) / fact(k + 1) * root(m + k, m)});
    break;
  case G::Ap:
    c.push_back({m + 1, std::sqrt(m + 1.0)});
    break;
  case G::Am:
    c.push_back({m - 1, std::sqrt(double(m))});
    for (int k = 0; deformed && m + k < dim; ++k)
      c.push_back({m + k, m * std::pow(a, k + 1) / fact(k + 1) * root(m + k, m)});
    break;
  case G::Bp:
    c.push_back({m + 2, std::sqrt((m + 1.0) * (m + 2.0))});
    for (int k = 1; deformed && m + k + 2 < dim; ++k)
      c.push_back({m + k + 2,
                   (std::pow(2.0, k + 2) - 2) * std::pow(-a, k) / fact(k + 2) * root(m + k + 2, m)});
    break;
  case G::Bm:
    c.push_back({m - 2, std::sqrt(m * (m - 1.0))});
    if (deformed) {
      c.push_back({m - 1, a * std::sqrt(double(m)) * (m - 1)});
      for (int k = 0; m + k < dim; ++k)
        c.push_back({m + k, m * (m - 1.0) * std::pow(a, k + 2) / fact(k + 2) * root(m + k, m)});
    }
    break;
  case G::M:
    c.push_back({m, 1.0});
    break;
  }
  return c;
}

/// Largest |x(n,m) − closed form| / max(1, |closed form|) over columns m ≤ D−1−G.
inline double number_state_deviation(const Matrix<double> &x, RepKind kind, G g, double a,
                                     std::size_t guard) {
  const int dim = static_cast<int>(x.rows());
  double worst = 0;
  for (int m = 0; m <= dim - 1 - static_cast<int>(guard); ++m) {
    std::vector<double> expect(dim, 0.0);
    for (auto [n, v] : number_state_column(kind, g, a, m, dim))
      if (n >= 0 && n < dim)
        expect[n] += v;
    for (int n = 0; n < dim; ++n)
      worst = std::max(worst, std::abs(x(n, m) - expect[n]) / std::max(1.0, std::abs(expect[n])));
  }
  return worst;
}

/// Exact agreement of the top-left n×n blocks.
inline bool agree_on_block(const ScalarMatrix &x, const ScalarMatrix &y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x(i, j) != y(i, j))
        return false;
  return true;
}

} // namespace testing_support
