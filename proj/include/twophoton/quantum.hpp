#pragma once

#include "twophoton/bialgebra.hpp"
#include "twophoton/fockrep.hpp"

#include <array>
#include <vector>

namespace twophoton {

/// coeff · left ⊗ right
struct TensorTerm {
  Scalar coeff;
  Expr left, right;
};

/// Δ of each generator as a sum of tensor terms. The classical kind gives the
/// primitive coproduct of the undeformed enveloping algebra.
class CoproductTable {
public:
  CoproductTable(RepKind kind, Scalar parameter, std::array<std::vector<TensorTerm>, 6> terms);

  RepKind kind() const { return kind_; }
  const Scalar &parameter() const { return parameter_; }
  const std::vector<TensorTerm> &operator[](Generator g) const { return terms_[index_of(g)]; }

  /// σΔ: every term with its legs exchanged.
  CoproductTable opposite() const;

  std::string to_string(Generator g) const;

private:
  RepKind kind_;
  Scalar parameter_;
  std::array<std::vector<TensorTerm>, 6> terms_;
};

CoproductTable coproduct_table(RepKind kind, const Scalar &parameter);

/// Δ(X) on V⊗V. DomainError when the rep kind differs from the table's.
ScalarMatrix coproduct(const CoproductTable &table, const TruncRep &rep, Generator x);
std::array<ScalarMatrix, 6> coproducts(const CoproductTable &table, const TruncRep &rep);

/// Δ extended to an expression as an algebra homomorphism, given the
/// coproducts of the generators.
ScalarMatrix coproduct_of(const Expr &e, const std::array<ScalarMatrix, 6> &delta,
                          std::size_t dim);

/// Δ([X,Y]) = [Δ(X), Δ(Y)] for all 15 pairs of the relation table.
VerificationReport hom_check(const CoproductTable &table, const TruncRep &rep,
                             std::size_t guard = 2);

/// (Δ⊗id)Δ(X) = (id⊗Δ)Δ(X) on V⊗V⊗V for all six generators.
VerificationReport coassoc_check(const CoproductTable &table, const TruncRep &rep,
                                 std::size_t guard = 2);

/// R = exp(−a P⊗N)·exp(a N⊗P), P = A+ (ua1) or B+ (ua2).
struct RMatrixSpec {
  RepKind kind;
  Scalar parameter;
  Generator primitive;
};
RMatrixSpec rmatrix_spec(RepKind kind, const Scalar &parameter);

ScalarMatrix rmatrix(const RMatrixSpec &spec, const TruncRep &rep);

/// R12 R13 R23 = R23 R13 R12 on the full cube. Falls back to the guarded
/// block if the full cube disagrees, and says which regime held in `note`.
VerificationReport qybe_check(const RMatrixSpec &spec, const TruncRep &rep,
                              std::size_t guard = 2);

/// R·Δ(X) = σΔ(X)σ·R for the six generators.
VerificationReport intertwine_check(const RMatrixSpec &spec, const CoproductTable &table,
                                    const TruncRep &rep, std::size_t guard = 2);

/// The family of the deformation: a1 N∧A+ (ua1), a2 N∧B+ (ua2), at unit
/// coefficient.
BialgebraParams deformation_family(RepKind kind);

/// First-order terms in the deformation parameter. The rep must carry a
/// single-variable polynomial parameter equal to that variable. Checks that
/// the degree-1 part of R − 1⊗1 is the rep of r and that the degree-1 part
/// of Δ(X) − σΔ(X) is the rep of δ(X).
VerificationReport semiclassical_check(const TruncRep &rep);

/// ρ⊗ρ of an order-2 tensor.
ScalarMatrix tensor_rep(const TensorElement &t, const TruncRep &rep);

} // namespace twophoton
