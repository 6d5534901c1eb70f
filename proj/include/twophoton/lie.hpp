#pragma once

#include "twophoton/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twophoton {

/// Basis of the two-photon algebra, in serialization order.
enum class Generator : std::uint8_t { N, Ap, Am, Bp, Bm, M };

inline constexpr std::array<Generator, 6> kGenerators = {
    Generator::N, Generator::Ap, Generator::Am,
    Generator::Bp, Generator::Bm, Generator::M};

inline constexpr std::size_t index_of(Generator g) {
  return static_cast<std::size_t>(g);
}

/// "N", "A+", "A-", "B+", "B-", "M".
std::string_view name(Generator g);
/// Also accepts the ASCII aliases "Ap", "Am", "Bp", "Bm".
std::optional<Generator> parse_generator(std::string_view s);

/// Sparse element of h6 over Scalar.
class LieElement {
public:
  LieElement() = default;
  static LieElement basis(Generator g, Scalar c = Scalar(1));

  Scalar coeff(Generator g) const;
  void add(Generator g, const Scalar &c);
  const std::map<Generator, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LieElement &operator+=(const LieElement &o);
  LieElement &operator-=(const LieElement &o);
  LieElement &operator*=(const Scalar &s);
  LieElement operator-() const;

  friend LieElement operator+(LieElement x, const LieElement &y) { return x += y; }
  friend LieElement operator-(LieElement x, const LieElement &y) { return x -= y; }
  friend LieElement operator*(const Scalar &s, LieElement x) { return x *= s; }
  friend bool operator==(const LieElement &x, const LieElement &y);

  /// e.g. "4/1*N + 2/1*M"; "0" for the zero element.
  std::string to_string() const;

private:
  std::map<Generator, Scalar> terms_;
};

/// Structure constants [X_i, X_j] = sum_k f_ij^k X_k (integers).
using StructureTable = std::array<std::array<std::array<int, 6>, 6>, 6>;
const StructureTable &structure_constants();

LieElement bracket(Generator x, Generator y);
LieElement bracket(const LieElement &x, const LieElement &y);

struct JacobiTerm {
  std::array<Generator, 3> triple;
  LieElement residual;
};

/// [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] for all 20 unordered basis triples.
std::vector<JacobiTerm> jacobi_residual();

} // namespace twophoton
