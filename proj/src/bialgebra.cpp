#include "twophoton/bialgebra.hpp"

#include "twophoton/errors.hpp"

#include <algorithm>

namespace twophoton {

const std::array<std::string_view, BialgebraParams::kCount> &BialgebraParams::names() {
  static constexpr std::array<std::string_view, kCount> n = {
      "a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2",
      "b3", "b4", "b5", "b6", "c1", "c2", "c3"};
  return n;
}

std::size_t BialgebraParams::index(std::string_view name) {
  const auto &n = names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end())
    throw ParseError("unknown bialgebra parameter '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - n.begin());
}

BialgebraParams BialgebraParams::symbolic() {
  BialgebraParams p;
  auto vars = VarSet::bialgebra();
  for (std::size_t i = 0; i < kCount; ++i)
    p.values_[i] = Scalar(Polynomial::variable(vars, i));
  return p;
}

BialgebraParams BialgebraParams::from(
    std::initializer_list<std::pair<std::string_view, Scalar>> values) {
  BialgebraParams p;
  for (const auto &[k, v] : values)
    p[k] = v;
  return p;
}

namespace {

using G = Generator;

struct RTerm {
  std::string_view param;
  Generator x, y;
};

// The general r-matrix, one wedge monomial per coefficient.
constexpr std::array<RTerm, 15> kRTerms = {{
    {"a1", G::N, G::Ap},  {"a2", G::N, G::Bp},  {"a3", G::Ap, G::M},
    {"a4", G::Bp, G::M},  {"a5", G::Ap, G::Bp}, {"a6", G::Ap, G::Bm},
    {"b1", G::N, G::Am},  {"b2", G::N, G::Bm},  {"b3", G::Am, G::M},
    {"b4", G::Bm, G::M},  {"b5", G::Am, G::Bm}, {"b6", G::Am, G::Bp},
    {"c1", G::N, G::M},   {"c2", G::Ap, G::Am}, {"c3", G::Bp, G::Bm},
}};

} // namespace

TensorElement build_r(const BialgebraParams &p) {
  TensorElement r(2);
  for (const auto &t : kRTerms)
    r += p[t.param] * wedge(t.x, t.y);
  return r;
}

TensorElement cocommutator(const BialgebraParams &p, const LieElement &x) {
  return ad_tensor(x, build_r(p));
}

TensorElement cocommutator(const BialgebraParams &p, Generator g) {
  return cocommutator(p, LieElement::basis(g));
}

TensorElement schouten(const TensorElement &r) {
  if (r.order() != 2)
    throw DomainError("Schouten bracket needs an order-2 tensor");
  const auto &f = structure_constants();
  TensorElement out(3);
  for (const auto &[ij, x] : r.terms())
    for (const auto &[kl, y] : r.terms()) {
      const Generator i = ij[0], j = ij[1], k = kl[0], l = kl[1];
      Scalar xy = x * y;
      for (Generator m : kGenerators) {
        const std::size_t mi = index_of(m);
        // [r12, r13]
        if (int c = f[index_of(i)][index_of(k)][mi])
          out.add({m, j, l}, Scalar(c) * xy);
        // [r12, r23]
        if (int c = f[index_of(j)][index_of(k)][mi])
          out.add({i, m, l}, Scalar(c) * xy);
        // [r13, r23]
        if (int c = f[index_of(j)][index_of(l)][mi])
          out.add({i, k, m}, Scalar(c) * xy);
      }
    }
  return out;
}

TensorElement schouten(const BialgebraParams &p) { return schouten(build_r(p)); }

Scalar discriminant(const BialgebraParams &p) {
  const auto &a1 = p["a1"], &a3 = p["a3"], &a5 = p["a5"], &a6 = p["a6"];
  const auto &b1 = p["b1"], &b3 = p["b3"], &b5 = p["b5"], &b6 = p["b6"];
  const auto &c2 = p["c2"];
  return a1 * b3 + a3 * b1 + Scalar(2) * a3 * a6 + Scalar(2) * b3 * b6 -
         Scalar(2) * a5 * b5 + Scalar(2) * a6 * b6 - c2 * c2;
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::NonStandard: return "non-standard";
  case Verdict::Standard: return "standard";
  case Verdict::GenericallyStandard: return "generically-standard";
  case Verdict::NotABialgebra: return "not-a-bialgebra";
  }
  return "?";
}

std::string ResidualId::label() const {
  return std::string(1, set) + std::to_string(position);
}

std::array<Scalar, 19> classification_polynomials(const BialgebraParams &p) {
  const Scalar &a1 = p["a1"], &a2 = p["a2"], &a3 = p["a3"], &a4 = p["a4"],
               &a5 = p["a5"], &a6 = p["a6"];
  const Scalar &b1 = p["b1"], &b2 = p["b2"], &b3 = p["b3"], &b4 = p["b4"],
               &b5 = p["b5"], &b6 = p["b6"];
  const Scalar &c1 = p["c1"], &c2 = p["c2"], &c3 = p["c3"];
  const Scalar two(2), three(3), four(4);
  return {
      // set A
      two * a6 * a6 - a6 * b1 + three * a1 * b5 + two * b5 * b6,
      a2 * a3 - two * a1 * a4 + two * a4 * b6 - three * a5 * c1 - a5 * c2 -
          two * a5 * c3,
      a1 * a2 - two * a2 * b6 - four * a5 * c3,
      a5 * b1 - a1 * b6 + two * a2 * c1 + two * a2 * c3 + four * a4 * c3,
      two * a2 * a6 + four * a4 * a6 - two * a4 * b1 - two * a5 * b2 +
          two * a2 * b3 - four * a5 * b4 + a1 * c1 + a1 * c2,
      three * a1 * b2 + two * a2 * b5 + four * a6 * c3 - two * b1 * c3,
      a3 * b2 + two * a1 * b4 + two * a4 * b5 + a6 * c1 - a6 * c2 -
          two * a6 * c3 - two * b3 * c3,
      three * a2 * b5 + b2 * b6 + two * a6 * c3,
      // set B
      two * b6 * b6 - b6 * a1 + three * b1 * a5 + two * a5 * a6,
      b2 * b3 - two * b1 * b4 + two * b4 * a6 - three * b5 * c1 + b5 * c2 +
          two * b5 * c3,
      b1 * b2 - two * b2 * a6 + four * b5 * c3,
      b5 * a1 - b1 * a6 + two * b2 * c1 - two * b2 * c3 - four * b4 * c3,
      two * b2 * b6 + four * b4 * b6 - two * b4 * a1 - two * b5 * a2 +
          two * b2 * a3 - four * b5 * a4 + b1 * c1 - b1 * c2,
      three * b1 * a2 + two * b2 * a5 - four * b6 * c3 + two * a1 * c3,
      b3 * a2 + two * b1 * a4 + two * b4 * a5 + b6 * c1 + b6 * c2 +
          two * b6 * c3 + two * a3 * c3,
      three * b2 * a5 + a2 * a6 - two * b6 * c3,
      // set C
      a2 * b2 + c3 * c3,
      two * a2 * b4 + two * a4 * b2 - a5 * b5 + a6 * b6 - two * c3 * c3,
      a1 * b1 + a1 * a6 + b1 * b6 + two * a5 * b5 - two * a6 * b6,
  };
}

std::vector<std::pair<ResidualId, Scalar>> ClassificationReport::residuals() const {
  std::vector<std::pair<ResidualId, Scalar>> out;
  for (int i = 0; i < 8; ++i)
    out.push_back({{'A', i + 1}, set_a[i]});
  for (int i = 0; i < 8; ++i)
    out.push_back({{'B', i + 1}, set_b[i]});
  for (int i = 0; i < 3; ++i)
    out.push_back({{'C', i + 1}, set_c[i]});
  return out;
}

std::vector<ResidualId> ClassificationReport::failing() const {
  std::vector<ResidualId> out;
  for (const auto &[id, v] : residuals())
    if (!v.is_zero())
      out.push_back(id);
  return out;
}

std::vector<Generator> primitive_generators(const BialgebraParams &p) {
  std::vector<Generator> out;
  TensorElement r = build_r(p);
  for (Generator g : kGenerators)
    if (ad_tensor(LieElement::basis(g), r).is_zero())
      out.push_back(g);
  return out;
}

ClassificationReport classify(const BialgebraParams &p) {
  ClassificationReport rep;
  auto polys = classification_polynomials(p);
  std::copy(polys.begin(), polys.begin() + 8, rep.set_a.begin());
  std::copy(polys.begin() + 8, polys.begin() + 16, rep.set_b.begin());
  std::copy(polys.begin() + 16, polys.end(), rep.set_c.begin());
  rep.discriminant = discriminant(p);
  rep.primitive = primitive_generators(p);
  if (!rep.failing().empty())
    rep.verdict = Verdict::NotABialgebra;
  else if (rep.discriminant.is_zero())
    rep.verdict = Verdict::NonStandard;
  else if (rep.discriminant.is_constant())
    rep.verdict = Verdict::Standard;
  else
    rep.verdict = Verdict::GenericallyStandard;
  return rep;
}

std::vector<TensorElement> mybe_invariance_residual(const BialgebraParams &p) {
  TensorElement s = schouten(p);
  std::vector<TensorElement> out;
  for (Generator g : kGenerators)
    out.push_back(ad_tensor(LieElement::basis(g), s));
  return out;
}

TensorElement cocycle_residual(const BialgebraParams &p, const LieElement &x,
                               const LieElement &y) {
  TensorElement r = build_r(p);
  TensorElement dx = ad_tensor(x, r);
  TensorElement dy = ad_tensor(y, r);
  // [δ(X), 1⊗Y + Y⊗1] = −ad_Y δ(X).
  return ad_tensor(bracket(x, y), r) + ad_tensor(y, dx) - ad_tensor(x, dy);
}

std::vector<LieElement> dual_jacobi_residual(const BialgebraParams &p) {
  // f[i][j] = Σ_k δ(X_k)^{ij} ξ^k
  std::array<std::array<LieElement, 6>, 6> f{};
  for (Generator k : kGenerators) {
    const TensorElement d = cocommutator(p, k);
    for (const auto &[idx, c] : d.terms())
      f[index_of(idx[0])][index_of(idx[1])].add(k, c);
  }
  auto dual_bracket = [&f](const LieElement &u, const LieElement &v) {
    LieElement out;
    for (const auto &[gu, cu] : u.terms())
      for (const auto &[gv, cv] : v.terms()) {
        LieElement t = f[index_of(gu)][index_of(gv)];
        t *= cu * cv;
        out += t;
      }
    return out;
  };
  std::vector<LieElement> out;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t l = j + 1; l < 6; ++l) {
        auto x = LieElement::basis(kGenerators[i]);
        auto y = LieElement::basis(kGenerators[j]);
        auto z = LieElement::basis(kGenerators[l]);
        out.push_back(dual_bracket(dual_bracket(x, y), z) +
                      dual_bracket(dual_bracket(y, z), x) +
                      dual_bracket(dual_bracket(z, x), y));
      }
  return out;
}

namespace {

std::pair<Generator, int> automorphism_image(Generator g) {
  switch (g) {
  case G::N: return {G::N, -1};
  case G::Ap: return {G::Am, -1};
  case G::Am: return {G::Ap, -1};
  case G::Bp: return {G::Bm, -1};
  case G::Bm: return {G::Bp, -1};
  case G::M: return {G::M, -1};
  }
  return {g, 1};
}

} // namespace

LieElement automorphism_map(const LieElement &x) {
  LieElement out;
  for (const auto &[g, c] : x.terms()) {
    auto [h, s] = automorphism_image(g);
    out.add(h, Scalar(s) * c);
  }
  return out;
}

TensorElement automorphism_map(const TensorElement &t) {
  TensorElement out(t.order());
  for (const auto &[idx, c] : t.terms()) {
    TensorIndex j = idx;
    int sign = 1;
    for (int leg = 0; leg < t.order(); ++leg) {
      auto [h, s] = automorphism_image(idx[leg]);
      j[leg] = h;
      sign *= s;
    }
    out.add(j, Scalar(sign) * c);
  }
  return out;
}

BialgebraParams automorphism_params(const BialgebraParams &p) {
  BialgebraParams q;
  for (std::size_t i = 0; i < 6; ++i) {
    q.at(i) = p.at(i + 6);
    q.at(i + 6) = p.at(i);
  }
  q["c1"] = p["c1"];
  q["c2"] = -p["c2"];
  q["c3"] = -p["c3"];
  return q;
}

std::string_view to_string(FamilyKind k) {
  switch (k) {
  case FamilyKind::TypeIStandard: return "I-standard";
  case FamilyKind::TypeINonStandard: return "I-nonstandard";
  case FamilyKind::TypeII: return "II";
  case FamilyKind::TypeIIIStandard: return "III-standard";
  case FamilyKind::TypeIIINonStandard: return "III-nonstandard";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view s) {
  for (auto k : {FamilyKind::TypeIStandard, FamilyKind::TypeINonStandard,
                 FamilyKind::TypeII, FamilyKind::TypeIIIStandard,
                 FamilyKind::TypeIIINonStandard})
    if (s == to_string(k))
      return k;
  throw ParseError("unknown family kind '" + std::string(s) + "'");
}

const std::vector<std::string_view> &family_free_params(FamilyKind k) {
  static const std::vector<std::string_view> i_std = {"c1", "c2"};
  static const std::vector<std::string_view> i_non = {"c1"};
  static const std::vector<std::string_view> ii = {"a1", "a3", "a4", "a5", "b3", "c1"};
  static const std::vector<std::string_view> iii_std = {"a2", "a3", "a4", "a5", "c2"};
  static const std::vector<std::string_view> iii_non = {"a2", "a4", "a5"};
  switch (k) {
  case FamilyKind::TypeIStandard: return i_std;
  case FamilyKind::TypeINonStandard: return i_non;
  case FamilyKind::TypeII: return ii;
  case FamilyKind::TypeIIIStandard: return iii_std;
  case FamilyKind::TypeIIINonStandard: return iii_non;
  }
  return i_non;
}

Generator family_primitive(FamilyKind k) {
  switch (k) {
  case FamilyKind::TypeIStandard:
  case FamilyKind::TypeINonStandard: return G::N;
  case FamilyKind::TypeII: return G::Ap;
  case FamilyKind::TypeIIIStandard:
  case FamilyKind::TypeIIINonStandard: return G::Bp;
  }
  return G::M;
}

BialgebraParams family(FamilyKind kind, const std::map<std::string, Scalar> &free) {
  const auto &allowed = family_free_params(kind);
  for (const auto &[name, v] : free)
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      throw ConstraintError("parameter '" + name + "' is not free in family " +
                            std::string(to_string(kind)));
  auto get = [&free](std::string_view n) {
    auto it = free.find(std::string(n));
    return it == free.end() ? Scalar() : it->second;
  };
  BialgebraParams p;
  for (auto n : allowed)
    p[n] = get(n);

  switch (kind) {
  case FamilyKind::TypeIStandard:
    if (p["c2"].is_zero())
      throw ConstraintError("I-standard requires c2 != 0");
    break;
  case FamilyKind::TypeINonStandard:
    break;
  case FamilyKind::TypeII:
    p["c2"] = -p["c1"];
    if (!(p["a1"] * p["a4"] + p["a5"] * p["c1"]).is_zero())
      throw ConstraintError("II requires a1*a4 + a5*c1 = 0");
    break;
  case FamilyKind::TypeIIIStandard:
    if (p["c2"].is_zero())
      throw ConstraintError("III-standard requires c2 != 0");
    if (!(p["a2"] * p["a3"] - p["a5"] * p["c2"]).is_zero())
      throw ConstraintError("III-standard requires a2*a3 - a5*c2 = 0");
    break;
  case FamilyKind::TypeIIINonStandard:
    break;
  }
  return p;
}

Scalar type_ii_a4(const Scalar &a1, const Scalar &a5, const Scalar &c1) {
  if (a1.is_zero())
    throw ConstraintError("solving a1*a4 + a5*c1 = 0 for a4 needs a1 != 0");
  return -(a5 * c1) / a1;
}

Scalar type_iii_a5(const Scalar &a2, const Scalar &a3, const Scalar &c2) {
  if (c2.is_zero())
    throw ConstraintError("solving a2*a3 - a5*c2 = 0 for a5 needs c2 != 0");
  return a2 * a3 / c2;
}

} // namespace twophoton
