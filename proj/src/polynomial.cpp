#include "twophoton/polynomial.hpp"

#include "twophoton/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twophoton {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate variable name in variable set");
}

std::shared_ptr<const VarSet> VarSet::bialgebra() {
  static const auto vars = std::make_shared<const VarSet>(std::vector<std::string>{
      "a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "b5", "b6",
      "c1", "c2", "c3"});
  return vars;
}

std::shared_ptr<const VarSet> VarSet::single(const std::string &name) {
  return std::make_shared<const VarSet>(std::vector<std::string>{name});
}

std::optional<std::size_t> VarSet::index(const std::string &name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool same_vars(const VarSetPtr &x, const VarSetPtr &y) {
  return x == y || (x && y && *x == *y);
}

bool GradedLexLess::operator()(const Exponents &x, const Exponents &y) const {
  unsigned dx = std::accumulate(x.begin(), x.end(), 0u);
  unsigned dy = std::accumulate(y.begin(), y.end(), 0u);
  if (dx != dy)
    return dx < dy;
  // Higher power of an earlier variable ranks higher.
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_)
    throw DomainError("polynomial requires a variable set");
}

Polynomial::Polynomial(VarSetPtr vars, const Rational &constant)
    : Polynomial(std::move(vars)) {
  if (constant != 0)
    terms_.emplace(Exponents(vars_->size(), 0u), constant);
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
  Polynomial p(std::move(vars));
  if (index >= p.vars_->size())
    throw DomainError("variable index out of range");
  Exponents e(p.vars_->size(), 0u);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, const std::string &name) {
  auto idx = vars->index(name);
  if (!idx)
    throw DomainError("unknown variable '" + name + "'");
  return variable(std::move(vars), *idx);
}

bool Polynomial::is_constant() const {
  if (terms_.empty())
    return true;
  if (terms_.size() > 1)
    return false;
  const auto &e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational Polynomial::constant_term() const {
  return coefficient(Exponents(vars_->size(), 0u));
}

unsigned Polynomial::total_degree() const {
  if (terms_.empty())
    return 0;
  const auto &e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

Rational Polynomial::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned k) const {
  if (var >= vars_->size())
    throw DomainError("variable index out of range");
  Polynomial out(vars_);
  for (const auto &[e, c] : terms_) {
    if (e[var] != k)
      continue;
    Exponents f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size())
    throw DomainError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto &[e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k)
        t *= point[i];
    sum += t;
  }
  return sum;
}

void Polynomial::check_vars(const Polynomial &o) const {
  if (!same_vars(vars_, o.vars_))
    throw DomainError("polynomial operands have different variable sets");
}

void Polynomial::add_term(const Exponents &e, const Rational &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  check_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  check_vars(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) {
  *this = *this * o;
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, c] : terms_)
    c *= q;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &[e, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial operator*(const Polynomial &x, const Polynomial &y) {
  x.check_vars(y);
  Polynomial out(x.vars_);
  Exponents e(x.vars_->size());
  for (const auto &[ex, cx] : x.terms_)
    for (const auto &[ey, cy] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ex[i] + ey[i];
      out.add_term(e, cx * cy);
    }
  return out;
}

bool operator==(const Polynomial &x, const Polynomial &y) {
  x.check_vars(y);
  return x.terms_ == y.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0/1";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    os << twophoton::to_string(Rational(abs(c)));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      os << '*' << vars_->name(i);
      if (e[i] > 1)
        os << '^' << e[i];
    }
  }
  return os.str();
}

} // namespace twophoton
