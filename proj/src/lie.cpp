#include "twophoton/lie.hpp"

#include "twophoton/errors.hpp"

namespace twophoton {

std::string_view name(Generator g) {
  static constexpr std::array<std::string_view, 6> names = {"N", "A+", "A-",
                                                            "B+", "B-", "M"};
  return names[index_of(g)];
}

std::optional<Generator> parse_generator(std::string_view s) {
  static constexpr std::array<std::string_view, 6> ascii = {"N", "Ap", "Am",
                                                            "Bp", "Bm", "M"};
  for (Generator g : kGenerators)
    if (s == name(g) || s == ascii[index_of(g)])
      return g;
  return std::nullopt;
}

LieElement LieElement::basis(Generator g, Scalar c) {
  LieElement x;
  x.add(g, c);
  return x;
}

Scalar LieElement::coeff(Generator g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second;
}

void LieElement::add(Generator g, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LieElement &LieElement::operator+=(const LieElement &o) {
  for (const auto &[g, c] : o.terms_)
    add(g, c);
  return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) {
  for (const auto &[g, c] : o.terms_)
    add(g, -c);
  return *this;
}

LieElement &LieElement::operator*=(const Scalar &s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  r *= Scalar(-1);
  return r;
}

bool operator==(const LieElement &x, const LieElement &y) {
  return (x - y).is_zero();
}

std::string LieElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[g, c] : terms_) {
    if (!out.empty())
      out += " + ";
    std::string cs = c.to_string();
    if (c.is_polynomial())
      cs = "(" + cs + ")";
    out += cs + "*" + std::string(name(g));
  }
  return out;
}

namespace {

StructureTable build_table() {
  StructureTable t{};
  auto set = [&t](Generator x, Generator y,
                  std::initializer_list<std::pair<Generator, int>> rhs) {
    for (auto [g, c] : rhs) {
      t[index_of(x)][index_of(y)][index_of(g)] = c;
      t[index_of(y)][index_of(x)][index_of(g)] = -c;
    }
  };
  using G = Generator;
  set(G::N, G::Ap, {{G::Ap, 1}});
  set(G::N, G::Am, {{G::Am, -1}});
  set(G::Am, G::Ap, {{G::M, 1}});
  set(G::N, G::Bp, {{G::Bp, 2}});
  set(G::N, G::Bm, {{G::Bm, -2}});
  set(G::Bm, G::Bp, {{G::N, 4}, {G::M, 2}});
  set(G::Ap, G::Bm, {{G::Am, -2}});
  set(G::Am, G::Bp, {{G::Ap, 2}});
  // [A+,B+] = [A-,B-] = 0 and M is central.
  return t;
}

} // namespace

const StructureTable &structure_constants() {
  static const StructureTable table = build_table();
  return table;
}

LieElement bracket(Generator x, Generator y) {
  const auto &row = structure_constants()[index_of(x)][index_of(y)];
  LieElement r;
  for (Generator g : kGenerators)
    if (int c = row[index_of(g)]; c != 0)
      r.add(g, Scalar(c));
  return r;
}

LieElement bracket(const LieElement &x, const LieElement &y) {
  const auto &f = structure_constants();
  LieElement r;
  for (const auto &[gx, cx] : x.terms())
    for (const auto &[gy, cy] : y.terms()) {
      Scalar c = cx * cy;
      for (Generator g : kGenerators)
        if (int k = f[index_of(gx)][index_of(gy)][index_of(g)]; k != 0)
          r.add(g, Scalar(k) * c);
    }
  return r;
}

std::vector<JacobiTerm> jacobi_residual() {
  std::vector<JacobiTerm> out;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      for (std::size_t k = j + 1; k < 6; ++k) {
        auto x = LieElement::basis(kGenerators[i]);
        auto y = LieElement::basis(kGenerators[j]);
        auto z = LieElement::basis(kGenerators[k]);
        LieElement r = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                       bracket(bracket(z, x), y);
        out.push_back({{kGenerators[i], kGenerators[j], kGenerators[k]}, r});
      }
  return out;
}

} // namespace twophoton
