#include "twophoton/fockrep.hpp"

#include <cmath>

namespace twophoton {

std::string_view to_string(RepKind k) {
  switch (k) {
  case RepKind::Classical: return "classical";
  case RepKind::Ua1: return "ua1";
  case RepKind::Ua2: return "ua2";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view s) {
  for (auto k : {RepKind::Classical, RepKind::Ua1, RepKind::Ua2})
    if (s == to_string(k))
      return k;
  throw ParseError("unknown representation kind '" + std::string(s) + "'");
}

TruncRep::TruncRep(RepKind kind, Scalar parameter, std::array<ScalarMatrix, 6> gens)
    : kind_(kind), parameter_(std::move(parameter)), dim_(gens[0].rows()),
      gens_(std::move(gens)) {
  for (const auto &m : gens_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw DomainError("representation matrices must share one square shape");
}

TruncRep TruncRep::truncated(std::size_t dim) const {
  if (dim < 4 || dim > dim_)
    throw DomainError("truncation needs 4 <= D <= " + std::to_string(dim_));
  std::array<ScalarMatrix, 6> blocks;
  for (std::size_t k = 0; k < gens_.size(); ++k)
    blocks[k] = gens_[k].block(dim);
  return TruncRep(kind_, parameter_, std::move(blocks));
}

BosonOps boson_ops(std::size_t dim) {
  if (dim < 2)
    throw DomainError("boson operators need D >= 2");
  BosonOps ops{ScalarMatrix(dim, dim), ScalarMatrix(dim, dim)};
  for (std::size_t m = 0; m + 1 < dim; ++m) {
    ops.raise(m + 1, m) = Scalar(1);
    ops.lower(m, m + 1) = Scalar(static_cast<long>(m + 1));
  }
  return ops;
}

ScalarMatrix function_of_raise(const OperatorSeries &f, std::size_t dim) {
  return nilpotent_series(f, boson_ops(dim).raise);
}

namespace {

void require_dim(std::size_t dim, std::size_t min, std::string_view what) {
  if (dim < min)
    throw DomainError(std::string(what) + " needs D >= " + std::to_string(min));
}

OperatorSeries named(const Series<Scalar> &s, std::size_t n, std::string label) {
  return OperatorSeries{s.regular(n), std::move(label)};
}

} // namespace

TruncRep rep_classical(std::size_t dim) {
  require_dim(dim, 4, "classical representation");
  auto [up, down] = boson_ops(dim);
  return TruncRep(RepKind::Classical, Scalar(0),
                  {up * down, up, down, up * up, down * down, ScalarMatrix::identity(dim)});
}

TruncRep rep_ua1(std::size_t dim, const Scalar &a) {
  require_dim(dim, 4, "ua1 representation");
  auto [up, down] = boson_ops(dim);
  auto f = [dim](const Series<Scalar> &s, const char *label) {
    return function_of_raise(named(s, dim, label), dim);
  };
  ScalarMatrix e = f(taylor::exp(a, dim), "exp(a t)");
  ScalarMatrix n = f(taylor::expm1_over(a, dim), "(exp(a t)-1)/a") * down;
  ScalarMatrix bp = f(taylor::ua1_bp(a, dim), "((1-exp(-a t))/a)^2");
  return TruncRep(RepKind::Ua1, a,
                  {n, up, e * down, bp, e * down * down, ScalarMatrix::identity(dim)});
}

TruncRep rep_ua2(std::size_t dim, const Scalar &a) {
  require_dim(dim, 5, "ua2 representation");
  auto [up, down] = boson_ops(dim);
  auto f = [dim](const Series<Scalar> &s, const char *label) {
    return function_of_raise(named(s, dim, label), dim);
  };
  ScalarMatrix n = f(taylor::ua2_n(a, dim), "(exp(2a t^2)-1)/(2a t)") * down;
  ScalarMatrix ap = f(taylor::ua2_ap(a, dim), "((1-exp(-2a t^2))/(2a))^(1/2)");
  ScalarMatrix am = f(taylor::ua2_am(a, dim), "exp(2a t^2)/t ((1-exp(-2a t^2))/(2a))^(1/2)") * down;
  ScalarMatrix bm = f(taylor::ua2_bm2(a, dim), "(exp(2a t^2)-1)/(2a t^2)") * down * down +
                    f(taylor::ua2_bm1(a, dim), "exp(2a t^2)/t + (1-exp(2a t^2))/(2a t^3)") * down;
  return TruncRep(RepKind::Ua2, a, {n, ap, am, up * up, bm, ScalarMatrix::identity(dim)});
}

TruncRep make_rep(RepKind kind, std::size_t dim, const Scalar &parameter) {
  switch (kind) {
  case RepKind::Classical: return rep_classical(dim);
  case RepKind::Ua1: return rep_ua1(dim, parameter);
  case RepKind::Ua2: return rep_ua2(dim, parameter);
  }
  throw DomainError("unknown representation kind");
}

std::string Relation::label() const {
  return "[" + std::string(name(x)) + "," + std::string(name(y)) + "]";
}

std::vector<Relation> relation_table(RepKind kind, const Scalar &a) {
  using G = Generator;
  const Expr N = Expr::gen(G::N), Ap = Expr::gen(G::Ap), Am = Expr::gen(G::Am),
             Bp = Expr::gen(G::Bp), Bm = Expr::gen(G::Bm), M = Expr::gen(G::M);
  const Expr zero = Scalar(0) * Expr::one();
  std::vector<Relation> t;
  switch (kind) {
  case RepKind::Classical:
    t = {{G::N, G::Ap, Ap},
         {G::N, G::Am, Scalar(-1) * Am},
         {G::Am, G::Ap, M},
         {G::N, G::Bp, Scalar(2) * Bp},
         {G::N, G::Bm, Scalar(-2) * Bm},
         {G::Bm, G::Bp, Scalar(4) * N + Scalar(2) * M},
         {G::Ap, G::Bm, Scalar(-2) * Am},
         {G::Ap, G::Bp, zero},
         {G::Am, G::Bp, Scalar(2) * Ap},
         {G::Am, G::Bm, zero}};
    break;
  case RepKind::Ua1: {
    const Expr e = exp_of(a, G::Ap);
    const Expr e_neg = exp_of(-a, G::Ap);
    const Expr one = Expr::one();
    t = {{G::N, G::Ap, Expr::apply(functions::expm1_over(a), "(exp(a1 t)-1)/a1", Ap)},
         {G::N, G::Am, Scalar(-1) * Am},
         {G::Am, G::Ap, M * e},
         {G::N, G::Bp, Scalar(2) * Bp},
         {G::N, G::Bm, Scalar(-2) * Bm - a * (Am * N)},
         {G::Bm, G::Bp, Scalar(2) * ((one + e_neg) * N) + Scalar(2) * M - Scalar(2) * a * (Am * Bp)},
         {G::Ap, G::Bm, Scalar(-1) * ((one + e) * Am) + a * (e * N)},
         {G::Ap, G::Bp, zero},
         {G::Am, G::Bp,
          Scalar(2) * Expr::apply(functions::one_minus_exp_neg_over(a), "(1-exp(-a1 t))/a1", Ap)},
         {G::Am, G::Bm, Scalar(-1) * a * (Am * Am)}};
    break;
  }
  case RepKind::Ua2: {
    const Scalar two_a = Scalar(2) * a;
    const Expr e2 = exp_of(two_a, G::Bp);
    t = {{G::N, G::Ap, Ap},
         {G::N, G::Am, Scalar(-1) * Am},
         {G::Am, G::Ap, M},
         {G::N, G::Bp,
          Scalar(2) * Expr::apply(functions::expm1_over(two_a), "(exp(2a2 t)-1)/(2a2)", Bp)},
         {G::N, G::Bm, Scalar(-2) * Bm - Scalar(4) * a * (N * N)},
         {G::Bm, G::Bp, Scalar(4) * N + Scalar(2) * (M * e2)},
         {G::Ap, G::Bm, Scalar(-2) * Am + two_a * (N * Ap + Ap * N)},
         {G::Ap, G::Bp, zero},
         {G::Am, G::Bp, Scalar(2) * (e2 * Ap)},
         {G::Am, G::Bm, Scalar(-1) * two_a * (N * Am + Am * N)}};
    break;
  }
  }
  for (G g : {G::N, G::Ap, G::Am, G::Bp, G::Bm})
    t.push_back({G::M, g, zero});
  return t;
}

VerificationReport check_relations(const TruncRep &rep, std::size_t guard) {
  if (guard < 2 || rep.dim() <= guard)
    throw DomainError("check_relations needs G >= 2 and D > G");
  VerificationReport report;
  report.check = "relations";
  report.kind = std::string(to_string(rep.kind()));
  report.dim = rep.dim();
  report.guard = guard;
  report.parameter = rep.parameter().to_string();
  auto gen = [&rep](Generator g) -> const ScalarMatrix & { return rep[g]; };
  for (const auto &rel : relation_table(rep.kind(), rep.parameter())) {
    ScalarMatrix lhs = commutator(rep[rel.x], rep[rel.y]);
    ScalarMatrix rhs = evaluate(rel.rhs, gen, rep.dim());
    compare_guarded(lhs, rhs, rep.dim(), 1, guard, rel.label(), report);
  }
  return report;
}

Matrix<double> to_number_basis(const ScalarMatrix &m) {
  // |n> = e_n / sqrt(n!), so the number-basis entry is m(i,j) sqrt(i!/j!).
  std::vector<double> log_fact(std::max(m.rows(), m.cols()) + 1, 0.0);
  for (std::size_t k = 1; k < log_fact.size(); ++k)
    log_fact[k] = log_fact[k - 1] + std::log(static_cast<double>(k));
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero())
        continue;
      out(i, j) = m(i, j).to_rational().get_d() *
                  std::exp(0.5 * (log_fact[i] - log_fact[j]));
    }
  return out;
}

std::array<Matrix<double>, 6> to_number_basis(const TruncRep &rep) {
  std::array<Matrix<double>, 6> out;
  for (Generator g : kGenerators)
    out[index_of(g)] = to_number_basis(rep[g]);
  return out;
}

} // namespace twophoton
