#pragma once

#include "twophoton/expr.hpp"
#include "twophoton/report.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace twophoton {

enum class RepKind { Classical, Ua1, Ua2 };
std::string_view to_string(RepKind k);
RepKind parse_rep_kind(std::string_view s);

/// Generator matrices in the Bargmann monomial basis e_m ≅ α^m, truncated to
/// e_0..e_{D-1}.
class TruncRep {
public:
  TruncRep(RepKind kind, Scalar parameter, std::array<ScalarMatrix, 6> gens);

  RepKind kind() const { return kind_; }
  const Scalar &parameter() const { return parameter_; }
  std::size_t dim() const { return dim_; }
  const ScalarMatrix &operator[](Generator g) const { return gens_[index_of(g)]; }
  const std::array<ScalarMatrix, 6> &matrices() const { return gens_; }

  /// Top-left D×D blocks. Equal to the rep built directly at D, since every
  /// generator is a lower-triangular series in â+ times at most two â-.
  TruncRep truncated(std::size_t dim) const;

private:
  RepKind kind_;
  Scalar parameter_;
  std::size_t dim_;
  std::array<ScalarMatrix, 6> gens_;
};

struct BosonOps {
  ScalarMatrix raise; // â+ e_m = e_{m+1}, e_{D-1} ↦ 0
  ScalarMatrix lower; // â- e_m = m e_{m-1}
};
BosonOps boson_ops(std::size_t dim);

/// f(â+) for a Taylor series f, truncated to dimension `dim`.
ScalarMatrix function_of_raise(const OperatorSeries &f, std::size_t dim);

TruncRep rep_classical(std::size_t dim);
TruncRep rep_ua1(std::size_t dim, const Scalar &a1);
TruncRep rep_ua2(std::size_t dim, const Scalar &a2);
TruncRep make_rep(RepKind kind, std::size_t dim, const Scalar &parameter);

/// Commutation rule [X, Y] = rhs.
struct Relation {
  Generator x, y;
  Expr rhs;
  std::string label() const;
};

/// The 15 commutation rules of h6 (classical) or of the deformed algebras,
/// one per unordered generator pair.
std::vector<Relation> relation_table(RepKind kind, const Scalar &parameter);

/// Checks every relation of the rep's table exactly on the guarded block
/// i, j ≤ D−1−G. Entries outside the block are not asserted but their
/// deviations feed max_violation_index.
VerificationReport check_relations(const TruncRep &rep, std::size_t guard = 4);

/// Conjugation by diag(√m!): the number-state matrices, in double precision.
Matrix<double> to_number_basis(const ScalarMatrix &m);
std::array<Matrix<double>, 6> to_number_basis(const TruncRep &rep);

} // namespace twophoton
