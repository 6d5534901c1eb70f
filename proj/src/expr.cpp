#include "twophoton/expr.hpp"

namespace twophoton {

ScalarMatrix nilpotent_series(const OperatorSeries &f, const ScalarMatrix &a) {
  if (!a.square() || !a.is_lower_triangular(/*strict=*/true))
    throw DomainError("nilpotent_series needs a strictly lower-triangular matrix (" +
                      f.label + ")");
  const std::size_t n = a.rows();
  ScalarMatrix sum(n, n);
  ScalarMatrix power = ScalarMatrix::identity(n);
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (!f.coeffs[k].is_zero())
      sum += f.coeffs[k] * power;
    power = power * a;
    if (power.is_zero())
      break;
  }
  return sum;
}

namespace functions {

namespace {
SeriesFactory from_taylor(std::string label,
                          std::function<Series<Scalar>(std::size_t)> build) {
  return [label = std::move(label), build = std::move(build)](std::size_t n) {
    return OperatorSeries{build(n).regular(n), label};
  };
}
} // namespace

SeriesFactory exp(const Scalar &c) {
  return from_taylor("exp(" + c.to_string() + " t)",
                     [c](std::size_t n) { return taylor::exp(c, n); });
}

SeriesFactory expm1_over(const Scalar &c) {
  return from_taylor("(exp(" + c.to_string() + " t) - 1)/" + c.to_string(),
                     [c](std::size_t n) { return taylor::expm1_over(c, n); });
}

SeriesFactory one_minus_exp_neg_over(const Scalar &c) {
  return from_taylor("(1 - exp(-" + c.to_string() + " t))/" + c.to_string(),
                     [c](std::size_t n) { return taylor::one_minus_exp_neg_over(c, n); });
}

} // namespace functions

struct Expr::Node {
  Kind kind;
  Generator generator = Generator::N;
  Scalar scale;
  std::vector<Expr> children;
  SeriesFactory function;
  std::string label;
};

Expr Expr::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Generator;
  n->generator = g;
  return Expr(std::move(n));
}

Expr Expr::one() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  return Expr(std::move(n));
}

Expr Expr::apply(SeriesFactory f, std::string label, Expr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Function;
  n->function = std::move(f);
  n->label = std::move(label);
  n->children.push_back(std::move(inner));
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
Generator Expr::generator() const { return node_->generator; }
const Scalar &Expr::scale() const { return node_->scale; }
const std::vector<Expr> &Expr::children() const { return node_->children; }
const SeriesFactory &Expr::function() const { return node_->function; }

Expr Expr::combine(Kind kind, const Expr &x, const Expr &y) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  // Flatten nested sums and products of the same kind.
  for (const Expr *e : {&x, &y}) {
    if (e->kind() == kind)
      n->children.insert(n->children.end(), e->children().begin(), e->children().end());
    else
      n->children.push_back(*e);
  }
  return Expr(std::move(n));
}

Expr operator+(const Expr &x, const Expr &y) { return Expr::combine(Expr::Kind::Sum, x, y); }
Expr operator-(const Expr &x, const Expr &y) { return x + Scalar(-1) * y; }
Expr operator*(const Expr &x, const Expr &y) { return Expr::combine(Expr::Kind::Product, x, y); }

Expr operator*(const Scalar &s, const Expr &x) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Scaled;
  n->scale = s;
  n->children.push_back(x);
  return Expr(std::move(n));
}

std::string Expr::to_string() const {
  switch (node_->kind) {
  case Kind::Generator: return std::string(name(node_->generator));
  case Kind::Identity: return "1";
  case Kind::Sum: {
    std::string s;
    for (const auto &c : node_->children)
      s += (s.empty() ? "" : " + ") + c.to_string();
    return "(" + s + ")";
  }
  case Kind::Product: {
    std::string s;
    for (const auto &c : node_->children)
      s += (s.empty() ? "" : " ") + c.to_string();
    return s;
  }
  case Kind::Scaled: return "(" + node_->scale.to_string() + ")*" + node_->children[0].to_string();
  case Kind::Function: return node_->label + "[" + node_->children[0].to_string() + "]";
  }
  return "?";
}

Expr exp_of(const Scalar &c, Generator x) {
  return Expr::apply(functions::exp(c), "exp(" + c.to_string() + " t)", Expr::gen(x));
}

ScalarMatrix evaluate(const Expr &e, const std::function<const ScalarMatrix &(Generator)> &gen,
                      std::size_t dim) {
  switch (e.kind()) {
  case Expr::Kind::Generator: return gen(e.generator());
  case Expr::Kind::Identity: return ScalarMatrix::identity(dim);
  case Expr::Kind::Sum: {
    ScalarMatrix s(dim, dim);
    for (const auto &c : e.children())
      s += evaluate(c, gen, dim);
    return s;
  }
  case Expr::Kind::Product: {
    ScalarMatrix p = evaluate(e.children().front(), gen, dim);
    for (std::size_t k = 1; k < e.children().size(); ++k)
      p = p * evaluate(e.children()[k], gen, dim);
    return p;
  }
  case Expr::Kind::Scaled: return e.scale() * evaluate(e.children().front(), gen, dim);
  case Expr::Kind::Function:
    return nilpotent_series(e.function()(dim), evaluate(e.children().front(), gen, dim));
  }
  throw DomainError("unknown expression node");
}

} // namespace twophoton
