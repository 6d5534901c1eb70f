#include "twophoton/quantum.hpp"

namespace twophoton {

CoproductTable::CoproductTable(RepKind kind, Scalar parameter,
                               std::array<std::vector<TensorTerm>, 6> terms)
    : kind_(kind), parameter_(std::move(parameter)), terms_(std::move(terms)) {}

CoproductTable CoproductTable::opposite() const {
  auto t = terms_;
  for (auto &terms : t)
    for (auto &term : terms)
      std::swap(term.left, term.right);
  return CoproductTable(kind_, parameter_, std::move(t));
}

std::string CoproductTable::to_string(Generator g) const {
  std::string s;
  for (const auto &t : (*this)[g]) {
    if (!s.empty())
      s += " + ";
    s += "(" + t.coeff.to_string() + ")*" + t.left.to_string() + " (x) " + t.right.to_string();
  }
  return s;
}

CoproductTable coproduct_table(RepKind kind, const Scalar &a) {
  using G = Generator;
  const Expr one = Expr::one();
  const Expr N = Expr::gen(G::N), Ap = Expr::gen(G::Ap), Am = Expr::gen(G::Am),
             Bp = Expr::gen(G::Bp), Bm = Expr::gen(G::Bm), M = Expr::gen(G::M);
  auto primitive = [&one](const Expr &x) {
    return std::vector<TensorTerm>{{Scalar(1), one, x}, {Scalar(1), x, one}};
  };
  std::array<std::vector<TensorTerm>, 6> t;
  for (G g : kGenerators)
    t[index_of(g)] = primitive(Expr::gen(g));
  switch (kind) {
  case RepKind::Classical:
    break;
  case RepKind::Ua1: {
    const Expr e = exp_of(a, G::Ap);
    t[index_of(G::N)] = {{1, one, N}, {1, N, e}};
    t[index_of(G::Bp)] = {{1, one, Bp}, {1, Bp, exp_of(Scalar(-2) * a, G::Ap)}};
    t[index_of(G::Am)] = {{1, one, Am}, {1, Am, e}, {a, N, e * M}};
    t[index_of(G::Bm)] = {{1, one, Bm},
                          {1, Bm, exp_of(Scalar(2) * a, G::Ap)},
                          {-a, Am, e * N},
                          {a, N, e * (Am - a * N)}};
    break;
  }
  case RepKind::Ua2: {
    const Expr e2 = exp_of(Scalar(2) * a, G::Bp);
    const Scalar two_a = Scalar(2) * a;
    t[index_of(G::N)] = {{1, one, N}, {1, N, e2}};
    t[index_of(G::Ap)] = {{1, one, Ap}, {1, Ap, exp_of(-a, G::Bp)}};
    t[index_of(G::Am)] = {{1, one, Am}, {1, Am, exp_of(a, G::Bp)}, {two_a, N, e2 * Ap}};
    t[index_of(G::Bm)] = {{1, one, Bm}, {1, Bm, e2}, {two_a, N, e2 * M}};
    break;
  }
  }
  return CoproductTable(kind, a, std::move(t));
}

namespace {

void require_match(const CoproductTable &table, const TruncRep &rep) {
  if (table.kind() != rep.kind() || !(table.parameter() == rep.parameter()))
    throw DomainError("coproduct table (" + std::string(to_string(table.kind())) + ", " +
                      table.parameter().to_string() + ") does not match the representation (" +
                      std::string(to_string(rep.kind())) + ", " + rep.parameter().to_string() +
                      ")");
}

ScalarMatrix eval_rep(const Expr &e, const TruncRep &rep) {
  return evaluate(e, [&rep](Generator g) -> const ScalarMatrix & { return rep[g]; }, rep.dim());
}

VerificationReport new_report(std::string check, const TruncRep &rep, std::size_t guard) {
  VerificationReport r;
  r.check = std::move(check);
  r.kind = std::string(to_string(rep.kind()));
  r.dim = rep.dim();
  r.guard = guard;
  r.parameter = rep.parameter().to_string();
  return r;
}

void require_guard(const TruncRep &rep, std::size_t guard) {
  if (rep.dim() <= guard)
    throw DomainError("guard band must be smaller than D");
}

ScalarMatrix exp_nilpotent(const ScalarMatrix &x) {
  return nilpotent_series(OperatorSeries{taylor::exp(Scalar(1), x.rows()).regular(x.rows()), "exp"},
                          x);
}

// Coefficient of t^1 in every entry, for a matrix over one variable t.
ScalarMatrix degree_one(const ScalarMatrix &m) {
  return m.map([](const Scalar &s) -> Scalar {
    if (const Polynomial *p = s.polynomial())
      return Scalar(p->coefficient_of(0, 1).constant_term());
    return Scalar(0);
  });
}

} // namespace

ScalarMatrix coproduct(const CoproductTable &table, const TruncRep &rep, Generator x) {
  require_match(table, rep);
  const std::size_t d = rep.dim();
  ScalarMatrix out(d * d, d * d);
  for (const auto &t : table[x])
    out += t.coeff * kron(eval_rep(t.left, rep), eval_rep(t.right, rep));
  return out;
}

std::array<ScalarMatrix, 6> coproducts(const CoproductTable &table, const TruncRep &rep) {
  std::array<ScalarMatrix, 6> out;
  for (Generator g : kGenerators)
    out[index_of(g)] = coproduct(table, rep, g);
  return out;
}

ScalarMatrix coproduct_of(const Expr &e, const std::array<ScalarMatrix, 6> &delta,
                          std::size_t dim) {
  return evaluate(e, [&delta](Generator g) -> const ScalarMatrix & { return delta[index_of(g)]; },
                  dim);
}

VerificationReport hom_check(const CoproductTable &table, const TruncRep &rep,
                             std::size_t guard) {
  require_match(table, rep);
  require_guard(rep, guard);
  auto report = new_report("hom", rep, guard);
  const std::size_t d = rep.dim();
  const auto delta = coproducts(table, rep);
  for (const auto &rel : relation_table(rep.kind(), rep.parameter())) {
    ScalarMatrix lhs = coproduct_of(rel.rhs, delta, d * d);
    ScalarMatrix rhs = commutator(delta[index_of(rel.x)], delta[index_of(rel.y)]);
    compare_guarded(lhs, rhs, d, 2, guard, rel.label(), report);
  }
  return report;
}

VerificationReport coassoc_check(const CoproductTable &table, const TruncRep &rep,
                                 std::size_t guard) {
  require_match(table, rep);
  require_guard(rep, guard);
  auto report = new_report("coassoc", rep, guard);
  const std::size_t d = rep.dim();
  const auto delta = coproducts(table, rep);
  for (Generator x : kGenerators) {
    ScalarMatrix left(d * d * d, d * d * d), right(d * d * d, d * d * d);
    for (const auto &t : table[x]) {
      left += t.coeff * kron(coproduct_of(t.left, delta, d * d), eval_rep(t.right, rep));
      right += t.coeff * kron(eval_rep(t.left, rep), coproduct_of(t.right, delta, d * d));
    }
    compare_guarded(left, right, d, 3, guard, "Delta(" + std::string(name(x)) + ")", report);
  }
  return report;
}

RMatrixSpec rmatrix_spec(RepKind kind, const Scalar &parameter) {
  switch (kind) {
  case RepKind::Ua1: return {kind, parameter, Generator::Ap};
  case RepKind::Ua2: return {kind, parameter, Generator::Bp};
  case RepKind::Classical: break;
  }
  throw DomainError("the classical algebra has no deformed R-matrix");
}

ScalarMatrix rmatrix(const RMatrixSpec &spec, const TruncRep &rep) {
  if (spec.kind != rep.kind() || !(spec.parameter == rep.parameter()))
    throw DomainError("R-matrix spec does not match the representation");
  const ScalarMatrix &p = rep[spec.primitive];
  const ScalarMatrix &n = rep[Generator::N];
  ScalarMatrix first = exp_nilpotent(-spec.parameter * kron(p, n));
  ScalarMatrix second = exp_nilpotent(spec.parameter * kron(n, p));
  return first * second;
}

VerificationReport qybe_check(const RMatrixSpec &spec, const TruncRep &rep, std::size_t guard) {
  require_guard(rep, guard);
  const std::size_t d = rep.dim();
  const ScalarMatrix r = rmatrix(spec, rep);
  const ScalarMatrix id = ScalarMatrix::identity(d);
  const ScalarMatrix r12 = kron(r, id);
  const ScalarMatrix r23 = kron(id, r);
  const ScalarMatrix r13 = permute_legs(r12, d, {0, 2, 1});
  const ScalarMatrix lhs = r12 * r13 * r23;
  const ScalarMatrix rhs = r23 * r13 * r12;

  auto full = new_report("qybe", rep, 0);
  if (compare_guarded(lhs, rhs, d, 3, 0, "R12 R13 R23", full)) {
    full.note = "exact on the full cube";
    return full;
  }
  auto guarded = new_report("qybe", rep, guard);
  compare_guarded(lhs, rhs, d, 3, guard, "R12 R13 R23", guarded);
  guarded.note = guarded.passed ? "full cube differs; exact on the guarded block"
                                : "fails on the guarded block";
  return guarded;
}

VerificationReport intertwine_check(const RMatrixSpec &spec, const CoproductTable &table,
                                    const TruncRep &rep, std::size_t guard) {
  require_match(table, rep);
  require_guard(rep, guard);
  auto report = new_report("intertwine", rep, guard);
  const std::size_t d = rep.dim();
  const ScalarMatrix r = rmatrix(spec, rep);
  for (Generator x : kGenerators) {
    ScalarMatrix delta = coproduct(table, rep, x);
    compare_guarded(r * delta, swap_legs(delta, d) * r, d, 2, guard,
                    "R Delta(" + std::string(name(x)) + ")", report);
  }
  return report;
}

BialgebraParams deformation_family(RepKind kind) {
  switch (kind) {
  case RepKind::Ua1: return BialgebraParams::from({{"a1", Scalar(1)}});
  case RepKind::Ua2: return BialgebraParams::from({{"a2", Scalar(1)}});
  case RepKind::Classical: break;
  }
  throw DomainError("the classical algebra is not a deformation");
}

ScalarMatrix tensor_rep(const TensorElement &t, const TruncRep &rep) {
  if (t.order() != 2)
    throw DomainError("tensor_rep needs an order-2 tensor");
  const std::size_t d = rep.dim();
  ScalarMatrix out(d * d, d * d);
  for (const auto &[idx, c] : t.terms())
    out += c * kron(rep[idx[0]], rep[idx[1]]);
  return out;
}

VerificationReport semiclassical_check(const TruncRep &rep) {
  const Polynomial *param = rep.parameter().polynomial();
  if (!param || param->vars()->size() != 1 ||
      !(*param == Polynomial::variable(param->vars(), 0)))
    throw DomainError("semiclassical_check needs the deformation parameter as a single variable");
  auto report = new_report("semiclassical", rep, 0);
  const std::size_t d = rep.dim();
  const TruncRep classical = rep_classical(d);
  const BialgebraParams family = deformation_family(rep.kind());

  const ScalarMatrix r1 =
      degree_one(rmatrix(rmatrix_spec(rep.kind(), rep.parameter()), rep) -
                 ScalarMatrix::identity(d * d));
  compare_guarded(r1, tensor_rep(build_r(family), classical), d, 2, 0, "R", report);
  compare_guarded(swap_legs(r1, d), -r1, d, 2, 0, "R antisymmetry", report);

  const auto table = coproduct_table(rep.kind(), rep.parameter());
  for (Generator x : kGenerators) {
    const ScalarMatrix delta = coproduct(table, rep, x);
    compare_guarded(degree_one(delta - swap_legs(delta, d)),
                    tensor_rep(cocommutator(family, x), classical), d, 2, 0,
                    "delta(" + std::string(name(x)) + ")", report);
  }
  return report;
}

} // namespace twophoton
