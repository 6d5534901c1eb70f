#include "twophoton/tensor.hpp"

#include "twophoton/errors.hpp"

#include <algorithm>

namespace twophoton {

TensorElement::TensorElement(int order) : order_(order) {
  if (order != 2 && order != 3)
    throw DomainError("tensor order must be 2 or 3");
}

TensorElement TensorElement::product(const LieElement &x, const LieElement &y) {
  TensorElement t(2);
  for (const auto &[gx, cx] : x.terms())
    for (const auto &[gy, cy] : y.terms())
      t.add({gx, gy, Generator::N}, cx * cy);
  return t;
}

TensorElement TensorElement::product(const LieElement &x, const LieElement &y,
                                     const LieElement &z) {
  TensorElement t(3);
  for (const auto &[gx, cx] : x.terms())
    for (const auto &[gy, cy] : y.terms())
      for (const auto &[gz, cz] : z.terms())
        t.add({gx, gy, gz}, cx * cy * cz);
  return t;
}

Scalar TensorElement::coeff(const TensorIndex &idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar TensorElement::coeff(Generator i, Generator j) const {
  if (order_ != 2)
    throw DomainError("two-index access on an order-3 tensor");
  return coeff({i, j, Generator::N});
}

Scalar TensorElement::coeff(Generator i, Generator j, Generator k) const {
  if (order_ != 3)
    throw DomainError("three-index access on an order-2 tensor");
  return coeff({i, j, k});
}

void TensorElement::add(TensorIndex idx, const Scalar &c) {
  if (order_ == 2)
    idx[2] = Generator::N;
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

bool TensorElement::is_alternating() const {
  for (const auto &[idx, c] : terms_) {
    if (order_ == 2) {
      if (!(coeff({idx[1], idx[0], Generator::N}) == -c))
        return false;
    } else {
      if (!(coeff({idx[1], idx[0], idx[2]}) == -c) ||
          !(coeff({idx[0], idx[2], idx[1]}) == -c) ||
          !(coeff({idx[2], idx[1], idx[0]}) == -c))
        return false;
    }
  }
  return true;
}

TensorElement TensorElement::swapped() const {
  if (order_ != 2)
    throw DomainError("leg swap is defined for order-2 tensors");
  TensorElement t(2);
  for (const auto &[idx, c] : terms_)
    t.add({idx[1], idx[0], Generator::N}, c);
  return t;
}

void TensorElement::check_order(const TensorElement &o) const {
  if (o.order_ != order_)
    throw DomainError("tensor orders differ");
}

TensorElement &TensorElement::operator+=(const TensorElement &o) {
  check_order(o);
  for (const auto &[idx, c] : o.terms_)
    add(idx, c);
  return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &o) {
  check_order(o);
  for (const auto &[idx, c] : o.terms_)
    add(idx, -c);
  return *this;
}

TensorElement &TensorElement::operator*=(const Scalar &s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  r *= Scalar(-1);
  return r;
}

bool operator==(const TensorElement &x, const TensorElement &y) {
  return x.order_ == y.order_ && (x - y).is_zero();
}

std::map<TensorIndex, Scalar> TensorElement::wedge_components() const {
  std::map<TensorIndex, Scalar> out;
  for (const auto &[idx, c] : terms_) {
    bool sorted = idx[0] < idx[1] && (order_ == 2 || idx[1] < idx[2]);
    if (sorted)
      out.emplace(idx, c);
  }
  return out;
}

std::string TensorElement::to_wedge_string() const {
  if (!is_alternating())
    throw DomainError("wedge form requested for a non-alternating tensor");
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[idx, c] : wedge_components()) {
    if (!out.empty())
      out += " + ";
    std::string cs = c.to_string();
    if (c.is_polynomial())
      cs = "(" + cs + ")";
    out += cs + "*" + std::string(name(idx[0])) + "^" + std::string(name(idx[1]));
    if (order_ == 3)
      out += "^" + std::string(name(idx[2]));
  }
  return out;
}

TensorElement wedge(const LieElement &x, const LieElement &y) {
  return TensorElement::product(x, y) - TensorElement::product(y, x);
}

TensorElement wedge(Generator x, Generator y) {
  return wedge(LieElement::basis(x), LieElement::basis(y));
}

TensorElement wedge(const LieElement &x, const LieElement &y,
                    const LieElement &z) {
  using T = TensorElement;
  return T::product(x, y, z) + T::product(y, z, x) + T::product(z, x, y) -
         T::product(y, x, z) - T::product(x, z, y) - T::product(z, y, x);
}

TensorElement wedge(Generator x, Generator y, Generator z) {
  return wedge(LieElement::basis(x), LieElement::basis(y),
               LieElement::basis(z));
}

TensorElement ad_tensor(const LieElement &x, const TensorElement &t) {
  const auto &f = structure_constants();
  TensorElement out(t.order());
  for (const auto &[idx, c] : t.terms())
    for (int leg = 0; leg < t.order(); ++leg)
      for (const auto &[gx, cx] : x.terms()) {
        Scalar base = cx * c;
        for (Generator g : kGenerators) {
          int k = f[index_of(gx)][index_of(idx[leg])][index_of(g)];
          if (k == 0)
            continue;
          TensorIndex j = idx;
          j[leg] = g;
          out.add(j, Scalar(k) * base);
        }
      }
  return out;
}

} // namespace twophoton
