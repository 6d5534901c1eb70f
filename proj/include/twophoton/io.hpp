#pragma once

#include "twophoton/bialgebra.hpp"
#include "twophoton/eigenstates.hpp"

#include <json.hpp>

#include <ostream>

namespace twophoton {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q", polynomials in their canonical text form.
Json scalar_json(const Scalar &s);
/// Accepts strings (rational, decimal or polynomial text over `vars`) and
/// JSON integers. JSON floats are read through their shortest decimal text.
Scalar scalar_from_json(const Json &j, const VarSetPtr &vars = nullptr);

/// {"a1": "p/q", ..., "c3": "p/q"}, all fifteen keys in fixed order.
Json params_json(const BialgebraParams &p);
/// Unknown keys raise ParseError; missing keys are zero. Polynomial strings
/// are read over the fifteen parameter names.
BialgebraParams params_from_json(const Json &j);

Json classification_json(const ClassificationReport &r);

/// Nonzero coefficients keyed by generator name.
Json lie_json(const LieElement &x);
/// Alternating tensors keyed by wedge monomials ("N^A+"), anything else by
/// tensor monomials ("N(x)A+").
Json tensor_json(const TensorElement &t);

/// Array of rows.
Json matrix_json(const ScalarMatrix &m);
Json matrix_json(const Matrix<double> &m);

/// {check, kind, D, guard, parameter, status, items, failed_items,
/// first_failure, max_violation_index, note}
Json report_json(const VerificationReport &r);

template <class T> Json value_json(const T &x) {
  if constexpr (std::is_same_v<T, double>)
    return x;
  else
    return scalar_json(x);
}

template <class T> Json series_json(const std::vector<T> &xs) {
  Json out = Json::array();
  for (const auto &x : xs)
    out.push_back(value_json(x));
  return out;
}

/// Problem, ODE coefficients and solution in one document.
template <class T>
Json eigenstate_json(const EigenProblem<T> &p, const ODESpec<T> &ode, const SeriesSolution<T> &s) {
  Json j;
  j["kind"] = std::string(to_string(p.kind));
  j["parameter"] = value_json(p.parameter);
  j["beta"] = series_json(std::vector<T>(p.beta.begin(), p.beta.end()));
  j["lambda"] = value_json(p.lambda);
  j["order"] = p.order;
  j["ode"] = {{"p2", series_json(ode.p2)},
              {"p1", series_json(ode.p1)},
              {"p0", series_json(ode.p0)},
              {"ordinary", ode.ordinary}};
  j["c0"] = value_json(s.c0);
  j["c1"] = value_json(s.c1);
  j["first_order"] = s.first_order;
  j["coefficients"] = series_json(s.coeffs);
  j["residual"] = series_json(s.residual);
  j["residual_norm"] = s.residual_norm;
  return j;
}

/// index,numerator,denominator for exact coefficients.
void write_series_csv(std::ostream &out, const std::vector<Scalar> &coeffs);
/// index,value with round-trip precision.
void write_series_csv(std::ostream &out, const std::vector<double> &coeffs);

} // namespace twophoton
