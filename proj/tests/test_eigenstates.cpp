#include <doctest.h>

#include "support.hpp"
#include "twophoton/eigenstates.hpp"

#include <cmath>

using namespace twophoton;
using namespace testing_support;

namespace {

constexpr RepKind kKinds[] = {RepKind::Classical, RepKind::Ua1, RepKind::Ua2};

Scalar q(long p, long r = 1) { return Scalar(make_rational(p, r)); }

EigenProblem<double> to_float(const EigenProblem<Scalar> &p) {
  EigenProblem<double> f;
  f.kind = p.kind;
  f.parameter = p.parameter.to_rational().get_d();
  for (std::size_t k = 0; k < 5; ++k)
    f.beta[k] = p.beta[k].to_rational().get_d();
  f.lambda = p.lambda.to_rational().get_d();
  f.order = p.order;
  return f;
}

} // namespace

TEST_CASE("classical coefficients follow the three-term recurrence to order 40") {
  RationalDraw draw(41);
  for (int trial = 0; trial < 5; ++trial) {
    EigenProblem<Scalar> p = random_problem(RepKind::Classical, draw, false);
    p.order = 40;
    const Scalar c0(draw.any()), c1(draw.any());
    const auto sol = solve_series(ode_from_problem(p), c0, c1, 40);
    const auto &b = p.beta;
    // b2 (k+2)(k+1) c_{k+2} = −[b4 (k+1) c_{k+1} + (b1 k − λ) c_k + b5 c_{k−1} + b3 c_{k−2}]
    std::vector<Scalar> c(41, Scalar(0));
    c[0] = c0;
    c[1] = c1;
    for (long k = 0; k + 2 <= 40; ++k) {
      Scalar rest = b[3] * Scalar(k + 1) * c[k + 1] + (b[0] * Scalar(k) - p.lambda) * c[k];
      if (k >= 1)
        rest += b[4] * c[k - 1];
      if (k >= 2)
        rest += b[2] * c[k - 2];
      c[k + 2] = Scalar(-1) * rest / (b[1] * Scalar((k + 2) * (k + 1)));
    }
    CHECK(sol.coeffs == c);
    for (const auto &r : sol.residual)
      CHECK(r.is_zero());
    CHECK(sol.residual_norm == 0.0);
  }
}

TEST_CASE("closed-form classical eigenfunctions") {
  EigenProblem<Scalar> p;
  p.order = 12;
  // d/dα f = f
  p.beta = {q(0), q(0), q(0), q(1), q(0)};
  p.lambda = q(1);
  auto sol = solve_series(ode_from_problem(p), q(1), q(0), 12);
  CHECK(sol.first_order);
  for (unsigned k = 0; k <= 12; ++k)
    CHECK(sol.coeffs[k] == Scalar(Rational(1) / Rational(factorial(k))));
  // d²/dα² f = f, f(0) = 1, f'(0) = 0
  p.beta = {q(0), q(1), q(0), q(0), q(0)};
  sol = solve_series(ode_from_problem(p), q(1), q(0), 12);
  CHECK_FALSE(sol.first_order);
  for (unsigned k = 0; k <= 12; ++k)
    CHECK(sol.coeffs[k] == (k % 2 ? q(0) : Scalar(Rational(1) / Rational(factorial(k)))));
  // α d/dα f = λ f has no regular start at 0
  p.beta = {q(1), q(0), q(0), q(0), q(0)};
  CHECK_THROWS_AS(solve_series(ode_from_problem(p), q(1), q(0), 12), DomainError);
}

TEST_CASE("series solutions are eigenvectors of the truncated operator") {
  RationalDraw draw(77);
  for (RepKind kind : kKinds)
    for (int trial = 0; trial < 8; ++trial) {
      const bool first = trial % 4 == 3;
      const EigenProblem<Scalar> p = random_problem(kind, draw, first);
      const auto sol = solve_series(ode_from_problem(p), Scalar(draw.nonzero()), Scalar(draw.any()), 20);
      CHECK(sol.first_order == first);
      const auto r = matrix_residual(p, sol.coeffs, 28);
      INFO(to_string(kind) << " trial " << trial);
      CHECK(r.passed);
      for (const auto &x : sol.residual)
        CHECK(x.is_zero());
    }
}

TEST_CASE("a perturbed coefficient breaks the matrix residual") {
  RationalDraw draw(5);
  for (RepKind kind : kKinds) {
    const EigenProblem<Scalar> p = random_problem(kind, draw, false);
    auto coeffs = solve_series(ode_from_problem(p), q(1), q(1, 2), 20).coeffs;
    coeffs[7] += q(1, 1000);
    CHECK_FALSE(matrix_residual(p, coeffs, 28).passed);
    CHECK_THROWS_AS(matrix_residual(p, coeffs, 23), DomainError);
  }
}

TEST_CASE("deformed eigenproblems reduce to the classical one at zero parameter") {
  RationalDraw draw(9);
  for (int trial = 0; trial < 5; ++trial) {
    EigenProblem<Scalar> p = random_problem(RepKind::Classical, draw, trial == 4);
    p.parameter = Scalar(0);
    const auto base = solve_series(ode_from_problem(p), q(1), q(-2, 3), 20).coeffs;
    for (RepKind kind : {RepKind::Ua1, RepKind::Ua2}) {
      p.kind = kind;
      CHECK(solve_series(ode_from_problem(p), q(1), q(-2, 3), 20).coeffs == base);
    }
    p.kind = RepKind::Classical;
  }
}

TEST_CASE("float mode agrees with exact arithmetic") {
  RationalDraw draw(13);
  for (RepKind kind : kKinds)
    for (int trial = 0; trial < 4; ++trial) {
      const EigenProblem<Scalar> p = random_problem(kind, draw, trial == 3);
      const auto exact = solve_series(ode_from_problem(p), q(1), q(1, 3), 20);
      const auto approx = solve_series(ode_from_problem(to_float(p)), 1.0, 1.0 / 3, 20);
      CHECK(approx.residual_norm <= 1e-12);
      REQUIRE(approx.coeffs.size() == exact.coeffs.size());
      for (std::size_t k = 0; k < exact.coeffs.size(); ++k) {
        const double e = exact.coeffs[k].to_rational().get_d();
        INFO(to_string(kind) << " c_" << k);
        CHECK(std::abs(approx.coeffs[k] - e) <= 1e-9 * std::max(1.0, std::abs(e)));
      }
    }
}

TEST_CASE("order and length guards") {
  EigenProblem<Scalar> p;
  p.beta = {q(0), q(1), q(0), q(0), q(0)};
  p.order = 3;
  CHECK_THROWS_AS(ode_from_problem(p), DomainError);
  p.order = 10;
  CHECK_THROWS_AS(solve_series(ode_from_problem(p), q(1), q(0), 11), DomainError);
}
