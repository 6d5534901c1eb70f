#include "twophoton/io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

namespace twophoton {

Json scalar_json(const Scalar &s) { return s.to_string(); }

Scalar scalar_from_json(const Json &j, const VarSetPtr &vars) {
  if (j.is_string())
    return parse_scalar(j.get<std::string>(), vars);
  if (j.is_number())
    return Scalar(parse_rational(j.dump()));
  throw ParseError("expected a rational string or number, got " + j.dump());
}

Json params_json(const BialgebraParams &p) {
  Json j = Json::object();
  for (std::size_t i = 0; i < BialgebraParams::kCount; ++i)
    j[std::string(BialgebraParams::names()[i])] = scalar_json(p.at(i));
  return j;
}

BialgebraParams params_from_json(const Json &j) {
  if (!j.is_object())
    throw ParseError("parameters must be a JSON object keyed a1..a6, b1..b6, c1..c3");
  BialgebraParams p;
  for (const auto &[key, value] : j.items()) {
    const auto &names = BialgebraParams::names();
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw ParseError("unknown parameter key '" + key + "'");
    try {
      p[key] = scalar_from_json(value, VarSet::bialgebra());
    } catch (const ParseError &e) {
      throw ParseError("parameter " + key + ": " + e.what());
    }
  }
  return p;
}

namespace {

Json generator_list(const std::vector<Generator> &gs) {
  Json out = Json::array();
  for (Generator g : gs)
    out.push_back(std::string(name(g)));
  return out;
}

std::string index_key(const TensorIndex &idx, int order, std::string_view sep) {
  std::string key;
  for (int k = 0; k < order; ++k) {
    if (k)
      key += sep;
    key += name(idx[k]);
  }
  return key;
}

} // namespace

Json classification_json(const ClassificationReport &r) {
  Json j;
  Json residuals = Json::object();
  Json failing = Json::array();
  for (const auto &[id, value] : r.residuals()) {
    residuals[id.label()] = scalar_json(value);
    if (!value.is_zero())
      failing.push_back(id.label());
  }
  j["residuals"] = residuals;
  j["failing"] = failing;
  j["discriminant"] = scalar_json(r.discriminant);
  j["verdict"] = std::string(to_string(r.verdict));
  j["primitive"] = generator_list(r.primitive);
  return j;
}

Json lie_json(const LieElement &x) {
  Json j = Json::object();
  for (const auto &[g, c] : x.terms())
    j[std::string(name(g))] = scalar_json(c);
  return j;
}

Json tensor_json(const TensorElement &t) {
  Json j = Json::object();
  if (t.is_alternating()) {
    for (const auto &[idx, c] : t.wedge_components())
      j[index_key(idx, t.order(), "^")] = scalar_json(c);
  } else {
    for (const auto &[idx, c] : t.terms())
      j[index_key(idx, t.order(), "(x)")] = scalar_json(c);
  }
  return j;
}

Json matrix_json(const ScalarMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const Matrix<double> &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json report_json(const VerificationReport &r) {
  Json j;
  j["check"] = r.check;
  j["kind"] = r.kind;
  j["D"] = r.dim;
  j["guard"] = r.guard;
  j["parameter"] = r.parameter;
  j["status"] = r.passed ? "pass" : "fail";
  j["items"] = r.items;
  j["failed_items"] = r.failed_items;
  if (r.first_failure) {
    const auto &f = *r.first_failure;
    j["first_failure"] = {{"item", f.item}, {"row", f.row}, {"col", f.col},
                          {"lhs", f.lhs},   {"rhs", f.rhs}};
  } else {
    j["first_failure"] = nullptr;
  }
  if (r.max_violation_index)
    j["max_violation_index"] = *r.max_violation_index;
  else
    j["max_violation_index"] = nullptr;
  if (!r.note.empty())
    j["note"] = r.note;
  return j;
}

void write_series_csv(std::ostream &out, const std::vector<Scalar> &coeffs) {
  out << "index,numerator,denominator\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational q = coeffs[k].to_rational();
    out << k << ',' << q.get_num().get_str() << ',' << q.get_den().get_str() << '\n';
  }
}

void write_series_csv(std::ostream &out, const std::vector<double> &coeffs) {
  out << "index,value\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out << k << ',' << (coeffs[k] == 0.0 ? 0.0 : coeffs[k]) << '\n';
}

} // namespace twophoton
