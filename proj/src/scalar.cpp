#include "twophoton/scalar.hpp"

#include "twophoton/errors.hpp"

#include <cctype>

namespace twophoton {

VarSetPtr Scalar::vars() const {
  if (auto p = polynomial())
    return p->vars();
  return nullptr;
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<Rational>(&value_))
    return *q == 0;
  return std::get<Polynomial>(value_).is_zero();
}

bool Scalar::is_constant() const {
  if (auto p = polynomial())
    return p->is_constant();
  return true;
}

Rational Scalar::to_rational() const {
  if (auto q = std::get_if<Rational>(&value_))
    return *q;
  const auto &p = std::get<Polynomial>(value_);
  if (!p.is_constant())
    throw DomainError("scalar '" + p.to_string() + "' is not a constant");
  return p.constant_term();
}

Polynomial Scalar::to_polynomial(const VarSetPtr &vars) const {
  if (auto q = std::get_if<Rational>(&value_))
    return Polynomial(vars, *q);
  const auto &p = std::get<Polynomial>(value_);
  if (!same_vars(p.vars(), vars))
    throw DomainError("scalar variable sets differ");
  return p;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  auto *q = std::get_if<Rational>(&value_);
  auto *oq = std::get_if<Rational>(&o.value_);
  if (q && oq) {
    *q += *oq;
  } else if (q) {
    value_ = o.to_polynomial(o.vars()) + Polynomial(o.vars(), *q);
  } else {
    auto &p = std::get<Polynomial>(value_);
    p += o.to_polynomial(p.vars());
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o) {
  auto *q = std::get_if<Rational>(&value_);
  auto *oq = std::get_if<Rational>(&o.value_);
  if (q && oq) {
    *q *= *oq;
  } else if (q) {
    value_ = o.to_polynomial(o.vars()) * *q;
  } else if (oq) {
    std::get<Polynomial>(value_) *= *oq;
  } else {
    auto &p = std::get<Polynomial>(value_);
    p = p * std::get<Polynomial>(o.value_);
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (!o.is_constant())
    throw DomainError("division by non-constant scalar '" + o.to_string() + "'");
  Rational d = o.to_rational();
  if (d == 0)
    throw DomainError("division by zero");
  Rational inv = 1 / d;
  return *this *= Scalar(inv);
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<Rational>(&value_))
    return Scalar(Rational(-*q));
  return Scalar(-std::get<Polynomial>(value_));
}

bool operator==(const Scalar &x, const Scalar &y) {
  auto *q = std::get_if<Rational>(&x.value_);
  auto *oq = std::get_if<Rational>(&y.value_);
  if (q && oq)
    return *q == *oq;
  if (q)
    return y.is_constant() && y.to_rational() == *q;
  if (oq)
    return x.is_constant() && x.to_rational() == *oq;
  return std::get<Polynomial>(x.value_) == std::get<Polynomial>(y.value_);
}

Rational Scalar::evaluate(std::span<const Rational> point) const {
  if (auto q = std::get_if<Rational>(&value_))
    return *q;
  return std::get<Polynomial>(value_).evaluate(point);
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<Rational>(&value_))
    return twophoton::to_string(*q);
  return std::get<Polynomial>(value_).to_string();
}

namespace {

/// Recursive-descent parser for polynomial expressions.
class ExprParser {
public:
  ExprParser(std::string_view text, VarSetPtr vars)
      : text_(text), vars_(std::move(vars)) {}

  Scalar parse() {
    Scalar s = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar s = term();
    for (;;) {
      if (accept('+'))
        s += term();
      else if (accept('-'))
        s -= term();
      else
        return s;
    }
  }

  Scalar term() {
    Scalar s = unary();
    for (;;) {
      if (accept('*'))
        s *= unary();
      else if (accept('/'))
        s /= unary();
      else
        return s;
    }
  }

  Scalar unary() {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64)
        fail("exponent too large");
      Scalar r(1);
      for (unsigned long k = 0; k < e; ++k)
        r *= base;
      return r;
    }
    return base;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar s = expr();
      if (!accept(')'))
        fail("expected ')'");
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return identifier();
    fail("unexpected character");
  }

  Scalar number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    // Exponent only when followed by a digit, so "2e" never eats a variable.
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (text_[pos_] == '+' || text_[pos_] == '-')
        ++pos_;
      if (pos_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits();
      else
        pos_ = save;
    }
    return Scalar(parse_rational(text_.substr(start, pos_ - start)));
  }

  Scalar identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!vars_ || !vars_->index(name))
      fail("unknown variable '" + name + "'");
    return Scalar::variable(vars_, name);
  }

  std::string_view text_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(std::string_view text, const VarSetPtr &vars) {
  return ExprParser(text, vars).parse();
}

} // namespace twophoton
