#pragma once

#include "twophoton/tensor.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace twophoton {

/// The fifteen r-matrix coefficients in the fixed order
/// a1..a6, b1..b6, c1..c3.
class BialgebraParams {
public:
  static constexpr std::size_t kCount = 15;
  static const std::array<std::string_view, kCount> &names();
  static std::size_t index(std::string_view name);

  BialgebraParams() = default;

  /// Every coefficient is its own variable of the bialgebra polynomial ring.
  static BialgebraParams symbolic();
  /// Named entries, the rest zero. Unknown names raise ParseError.
  static BialgebraParams from(std::initializer_list<std::pair<std::string_view, Scalar>> values);

  const Scalar &operator[](std::string_view name) const { return values_[index(name)]; }
  Scalar &operator[](std::string_view name) { return values_[index(name)]; }
  const Scalar &at(std::size_t i) const { return values_.at(i); }
  Scalar &at(std::size_t i) { return values_.at(i); }
  const std::array<Scalar, kCount> &values() const { return values_; }

  friend bool operator==(const BialgebraParams &x, const BialgebraParams &y) {
    return x.values_ == y.values_;
  }

private:
  std::array<Scalar, kCount> values_{};
};

/// r = a1 N∧A+ + a2 N∧B+ + ... + c3 B+∧B-.
TensorElement build_r(const BialgebraParams &p);

/// δ(X) = [1⊗X + X⊗1, r].
TensorElement cocommutator(const BialgebraParams &p, const LieElement &x);
TensorElement cocommutator(const BialgebraParams &p, Generator g);

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23].
TensorElement schouten(const TensorElement &r);
TensorElement schouten(const BialgebraParams &p);

/// a1 b3 + a3 b1 + 2 a3 a6 + 2 b3 b6 − 2 a5 b5 + 2 a6 b6 − c2²: the
/// A+∧A-∧M coefficient of the Schouten bracket.
Scalar discriminant(const BialgebraParams &p);

enum class Verdict { NonStandard, Standard, GenericallyStandard, NotABialgebra };
std::string_view to_string(Verdict v);

/// Identifies one of the 19 classification polynomials, e.g. "A1", "C3".
struct ResidualId {
  char set;       // 'A', 'B' or 'C'
  int position;   // 1-based inside its set
  std::string label() const;
};

struct ClassificationReport {
  std::array<Scalar, 8> set_a;
  std::array<Scalar, 8> set_b;
  std::array<Scalar, 3> set_c;
  Scalar discriminant;
  Verdict verdict;
  std::vector<Generator> primitive;

  /// All 19 residuals in A, B, C order.
  std::vector<std::pair<ResidualId, Scalar>> residuals() const;
  std::vector<ResidualId> failing() const;
};

/// The 19 polynomials of the three equation sets, evaluated at p.
std::array<Scalar, 19> classification_polynomials(const BialgebraParams &p);

ClassificationReport classify(const BialgebraParams &p);

/// Generators whose cocommutator vanishes exactly.
std::vector<Generator> primitive_generators(const BialgebraParams &p);

/// ad_X([[r,r]]) for the six generators, in basis order.
std::vector<TensorElement> mybe_invariance_residual(const BialgebraParams &p);

/// δ([X,Y]) − [δ(X), 1⊗Y+Y⊗1] − [1⊗X+X⊗1, δ(Y)].
TensorElement cocycle_residual(const BialgebraParams &p, const LieElement &x,
                               const LieElement &y);

/// Jacobi defect of the dual bracket [ξ^i,ξ^j] = Σ_k δ(X_k)^{ij} ξ^k, one
/// entry per unordered triple of dual basis vectors; each is a covector
/// keyed by generator.
std::vector<LieElement> dual_jacobi_residual(const BialgebraParams &p);

/// N→−N, A±→−A∓, B±→−B∓, M→−M.
LieElement automorphism_map(const LieElement &x);
/// a_i↔b_i, c1→c1, c2→−c2, c3→−c3.
BialgebraParams automorphism_params(const BialgebraParams &p);
/// Image of a tensor under the generator automorphism applied leg-wise.
TensorElement automorphism_map(const TensorElement &t);

enum class FamilyKind { TypeIStandard, TypeINonStandard, TypeII, TypeIIIStandard, TypeIIINonStandard };

std::string_view to_string(FamilyKind k);
FamilyKind parse_family_kind(std::string_view s);
/// Free parameter names accepted by each family constructor.
const std::vector<std::string_view> &family_free_params(FamilyKind k);
/// Generator (besides M) the family makes primitive.
Generator family_primitive(FamilyKind k);

/// Builds the parameter tuple of a two-primitive-generator family. Missing
/// free parameters default to zero. Defining relations and inequations are
/// checked, never solved; violations raise ConstraintError.
BialgebraParams family(FamilyKind kind, const std::map<std::string, Scalar> &free);

/// a4 = −a5 c1 / a1, the Type II relation solved for a4 (a1 ≠ 0).
Scalar type_ii_a4(const Scalar &a1, const Scalar &a5, const Scalar &c1);
/// a5 = a2 a3 / c2, the Type III relation solved for a5 (c2 ≠ 0).
Scalar type_iii_a5(const Scalar &a2, const Scalar &a3, const Scalar &c2);

} // namespace twophoton
