#include "twophoton/eigenstates.hpp"

namespace twophoton {

ScalarMatrix eigen_operator(const EigenProblem<Scalar> &p, std::size_t dim) {
  const TruncRep rep = make_rep(p.kind, dim, p.parameter);
  using G = Generator;
  const std::array<G, 5> order = {G::N, G::Bm, G::Bp, G::Am, G::Ap};
  ScalarMatrix h(dim, dim);
  for (std::size_t k = 0; k < order.size(); ++k)
    if (!p.beta[k].is_zero())
      h += p.beta[k] * rep[order[k]];
  return h;
}

VerificationReport matrix_residual(const EigenProblem<Scalar> &p,
                                   const std::vector<Scalar> &coeffs, std::size_t dim) {
  if (coeffs.size() < 3)
    throw DomainError("matrix_residual needs at least three coefficients");
  const std::size_t n = coeffs.size() - 1;
  if (dim < n + 4)
    throw DomainError("matrix_residual needs D >= n + 4 (n = " + std::to_string(n) + ")");
  VerificationReport report;
  report.check = "matrix_residual";
  report.kind = std::string(to_string(p.kind));
  report.dim = dim;
  report.guard = dim - (n - 1);
  report.parameter = p.parameter.to_string();
  report.items.push_back("rows 0.." + std::to_string(n - 2));

  const ScalarMatrix h = eigen_operator(p, dim);
  for (std::size_t i = 0; i + 2 <= n; ++i) {
    Scalar r = -p.lambda * coeffs[i];
    for (std::size_t j = 0; j <= n; ++j)
      if (!h(i, j).is_zero() && !coeffs[j].is_zero())
        r += h(i, j) * coeffs[j];
    if (r.is_zero())
      continue;
    report.max_violation_index = std::max(report.max_violation_index.value_or(0), i);
    if (report.passed) {
      report.passed = false;
      report.failed_items.push_back("(H - lambda) c");
      report.first_failure = Mismatch{"(H - lambda) c", {i}, {}, r.to_string(), "0/1"};
    }
  }
  return report;
}

} // namespace twophoton
