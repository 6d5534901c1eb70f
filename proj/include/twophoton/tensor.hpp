#pragma once

#include "twophoton/lie.hpp"

#include <array>
#include <map>
#include <string>

namespace twophoton {

/// Index tuple of a tensor component; only the first `order` entries are used.
using TensorIndex = std::array<Generator, 3>;

/// Sparse element of h6^{⊗2} or h6^{⊗3}. Zero coefficients are never stored.
class TensorElement {
public:
  explicit TensorElement(int order = 2);

  /// X⊗Y and X⊗Y⊗Z.
  static TensorElement product(const LieElement &x, const LieElement &y);
  static TensorElement product(const LieElement &x, const LieElement &y,
                               const LieElement &z);

  int order() const { return order_; }
  const std::map<TensorIndex, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(Generator i, Generator j) const;
  Scalar coeff(Generator i, Generator j, Generator k) const;
  Scalar coeff(const TensorIndex &idx) const;
  void add(TensorIndex idx, const Scalar &c);

  /// Order 2: t(i,j) = -t(j,i). Order 3: sign change under every transposition.
  bool is_alternating() const;

  /// Flips the two legs of an order-2 tensor.
  TensorElement swapped() const;

  TensorElement &operator+=(const TensorElement &o);
  TensorElement &operator-=(const TensorElement &o);
  TensorElement &operator*=(const Scalar &s);
  TensorElement operator-() const;

  friend TensorElement operator+(TensorElement x, const TensorElement &y) { return x += y; }
  friend TensorElement operator-(TensorElement x, const TensorElement &y) { return x -= y; }
  friend TensorElement operator*(const Scalar &s, TensorElement x) { return x *= s; }
  friend bool operator==(const TensorElement &x, const TensorElement &y);

  /// Components on sorted index tuples (i<j or i<j<k). For an alternating
  /// tensor these are its coordinates in the wedge basis.
  std::map<TensorIndex, Scalar> wedge_components() const;

  /// Wedge-basis text, e.g. "1/1*N^A+ - ...". Requires an alternating tensor.
  std::string to_wedge_string() const;

private:
  void check_order(const TensorElement &o) const;

  int order_;
  std::map<TensorIndex, Scalar> terms_;
};

/// X∧Y := X⊗Y − Y⊗X (no 1/2).
TensorElement wedge(const LieElement &x, const LieElement &y);
TensorElement wedge(Generator x, Generator y);

/// X∧Y∧Z := Σ_{σ∈S3} sgn(σ) σ(X⊗Y⊗Z).
TensorElement wedge(const LieElement &x, const LieElement &y, const LieElement &z);
TensorElement wedge(Generator x, Generator y, Generator z);

/// Leibniz action of x on every leg: [x⊗1 + 1⊗x (+ ...), t].
TensorElement ad_tensor(const LieElement &x, const TensorElement &t);

} // namespace twophoton
