#include "twophoton/cli.hpp"

#include "twophoton/io.hpp"
#include "twophoton/quantum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace twophoton {

namespace {

struct Options {
  bool exact = false;
  bool floating = false;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> guard;
  std::size_t order = 20;
  std::vector<std::string> params;
  std::string out;
  std::string format = "json";

  // per subcommand
  std::string input;
  std::string inline_json;
  std::string kind;
  std::string generator;
  std::vector<std::string> checks;
  bool dump_matrix = false;
  std::vector<std::string> beta;
  std::string lambda = "0";
  std::string c0 = "1";
  std::string c1 = "0";
  std::optional<std::size_t> check_dim;
  std::string basis = "monomial";
};

void add_common(CLI::App *cmd, Options &o) {
  auto *ex = cmd->add_flag("--exact", o.exact, "Exact rational arithmetic (default)");
  auto *fl = cmd->add_flag("--float", o.floating, "Double precision where supported");
  ex->excludes(fl);
  cmd->add_option("--dim", o.dim, "Truncation dimension D")->check(CLI::Range(1, 64));
  cmd->add_option("--guard", o.guard, "Guard band G");
  cmd->add_option("--order", o.order, "Series order");
  cmd->add_option("--param", o.params, "Parameter value(s): VALUE or NAME=VALUE");
  cmd->add_option("--out", o.out, "Write the document to this file");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

std::string param_name(RepKind kind) { return kind == RepKind::Ua1 ? "a1" : "a2"; }

class Command {
public:
  Command(const Options &o, std::istream &in, std::ostream &out) : o_(o), in_(in), out_(out) {}

  int classify();
  int family();
  int cocommutator();
  int verify();
  int rmatrix();
  int eigenstate();
  int rep();

private:
  void require_exact(std::string_view what) const {
    if (o_.floating)
      throw ParseError(std::string(what) + " runs in exact mode only");
  }
  void require_json(std::string_view what) const {
    if (o_.format != "json")
      throw ParseError(std::string(what) + " only writes JSON");
  }

  Json read_input() const;
  BialgebraParams read_params() const;
  std::string deformation_text(RepKind kind) const;
  Scalar deformation_parameter(RepKind kind) const {
    return parse_scalar(deformation_text(kind), VarSet::single(param_name(kind)));
  }
  void emit(const Json &j) const { emit_text(j.dump(2) + "\n"); }
  void emit_text(const std::string &text) const;

  template <class T> int eigenstate_as(RepKind kind);

  const Options &o_;
  std::istream &in_;
  std::ostream &out_;
};

void Command::emit_text(const std::string &text) const {
  if (o_.out.empty()) {
    out_ << text;
    return;
  }
  std::ofstream f(o_.out, std::ios::binary);
  if (!f)
    throw ParseError("cannot open output file '" + o_.out + "'");
  f << text;
}

Json Command::read_input() const {
  std::string text;
  if (!o_.inline_json.empty()) {
    text = o_.inline_json;
  } else if (o_.input.empty() || o_.input == "-") {
    std::ostringstream ss;
    ss << in_.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o_.input, std::ios::binary);
    if (!f)
      throw ParseError("cannot open input file '" + o_.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// A document is either the bare parameter object or anything carrying one
// under "params" (the output of family and classify).
BialgebraParams Command::read_params() const {
  const Json j = read_input();
  if (j.is_object() && j.contains("params"))
    return params_from_json(j.at("params"));
  return params_from_json(j);
}

std::string Command::deformation_text(RepKind kind) const {
  if (kind == RepKind::Classical) {
    if (!o_.params.empty())
      throw ParseError("the classical kind takes no --param");
    return "0";
  }
  if (o_.params.size() != 1)
    throw ParseError("expected exactly one --param for " + std::string(to_string(kind)));
  const std::string name = param_name(kind);
  std::string text = o_.params.front();
  if (auto eq = text.find('='); eq != std::string::npos) {
    if (text.substr(0, eq) != name)
      throw ParseError("the deformation parameter of " + std::string(to_string(kind)) +
                       " is " + name);
    text = text.substr(eq + 1);
  }
  return text;
}

TruncRep rep_at(RepKind kind, std::size_t dim, const Scalar &a) {
  if (dim < 4)
    throw ParseError("--dim must be at least 4");
  if (dim < 5)
    return make_rep(kind, 5, a).truncated(dim);
  return make_rep(kind, dim, a);
}

std::map<std::string, Scalar> named_values(const std::vector<std::string> &items) {
  std::map<std::string, Scalar> out;
  for (const auto &item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected NAME=VALUE, got '" + item + "'");
    out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1), VarSet::bialgebra());
  }
  return out;
}

int Command::classify() {
  require_exact("classify");
  require_json("classify");
  const BialgebraParams p = read_params();
  const ClassificationReport r = twophoton::classify(p);
  Json j;
  j["params"] = params_json(p);
  const Json report = classification_json(r);
  for (const auto &[k, v] : report.items())
    j[k] = v;
  emit(j);
  return r.verdict == Verdict::NotABialgebra ? kExitVerificationFailure : kExitPass;
}

int Command::family() {
  require_exact("family");
  require_json("family");
  const FamilyKind kind = parse_family_kind(o_.kind);
  const BialgebraParams p = twophoton::family(kind, named_values(o_.params));
  const ClassificationReport r = twophoton::classify(p);
  const bool standard = kind == FamilyKind::TypeIStandard || kind == FamilyKind::TypeIIIStandard;
  const bool nonstandard =
      kind == FamilyKind::TypeINonStandard || kind == FamilyKind::TypeIIINonStandard;
  bool ok = r.verdict != Verdict::NotABialgebra;
  ok = ok && !(standard && r.verdict == Verdict::NonStandard);
  ok = ok && !(nonstandard && r.verdict != Verdict::NonStandard);
  const Generator declared = family_primitive(kind);
  ok = ok && std::count(r.primitive.begin(), r.primitive.end(), declared) == 1;
  Json j;
  j["family"] = std::string(to_string(kind));
  j["params"] = params_json(p);
  j["verdict"] = std::string(to_string(r.verdict));
  j["primitive"] = classification_json(r)["primitive"];
  emit(j);
  return ok ? kExitPass : kExitVerificationFailure;
}

int Command::cocommutator() {
  require_exact("cocommutator");
  require_json("cocommutator");
  const BialgebraParams p = read_params();
  std::vector<Generator> gens(kGenerators.begin(), kGenerators.end());
  if (!o_.generator.empty()) {
    auto g = parse_generator(o_.generator);
    if (!g)
      throw ParseError("unknown generator '" + o_.generator + "'");
    gens = {*g};
  }
  Json table = Json::object();
  for (Generator g : gens)
    table[std::string(name(g))] = tensor_json(twophoton::cocommutator(p, g));
  emit({{"params", params_json(p)}, {"cocommutator", table}});
  return kExitPass;
}

int Command::verify() {
  require_exact("verify");
  require_json("verify");
  const RepKind kind = parse_rep_kind(o_.kind);
  const Scalar a = deformation_parameter(kind);
  const std::size_t dim = o_.dim.value_or(8);
  std::vector<std::string> checks = o_.checks;
  if (checks.empty()) {
    if (kind == RepKind::Classical)
      checks = {"relations"};
    else if (a.is_polynomial())
      checks = {"relations", "semiclassical"};
    else
      checks = {"relations", "hom", "coassoc"};
  }
  const TruncRep rep = rep_at(kind, dim, a);
  std::vector<VerificationReport> reports;
  for (const auto &c : checks) {
    if (c == "relations") {
      reports.push_back(check_relations(rep, o_.guard.value_or(4)));
      continue;
    }
    if (kind == RepKind::Classical)
      throw ParseError("check '" + c + "' needs a deformed kind");
    const auto table = coproduct_table(kind, a);
    const std::size_t guard = o_.guard.value_or(2);
    if (c == "hom")
      reports.push_back(hom_check(table, rep, guard));
    else if (c == "coassoc")
      reports.push_back(coassoc_check(table, rep, guard));
    else if (c == "qybe")
      reports.push_back(qybe_check(rmatrix_spec(kind, a), rep, guard));
    else if (c == "intertwine")
      reports.push_back(intertwine_check(rmatrix_spec(kind, a), table, rep, guard));
    else if (c == "semiclassical")
      reports.push_back(semiclassical_check(rep));
    else
      throw ParseError("unknown check '" + c + "'");
  }
  bool passed = true;
  Json list = Json::array();
  for (const auto &r : reports) {
    passed = passed && r.passed;
    list.push_back(report_json(r));
  }
  emit({{"kind", std::string(to_string(kind))},
        {"D", dim},
        {"parameter", a.to_string()},
        {"status", passed ? "pass" : "fail"},
        {"reports", list}});
  return passed ? kExitPass : kExitVerificationFailure;
}

int Command::rmatrix() {
  require_exact("rmatrix");
  require_json("rmatrix");
  const RepKind kind = parse_rep_kind(o_.kind);
  if (kind == RepKind::Classical)
    throw ParseError("rmatrix needs ua1 or ua2");
  const Scalar a = deformation_parameter(kind);
  const std::size_t dim = o_.dim.value_or(4);
  const std::size_t guard = o_.guard.value_or(2);
  const TruncRep rep = rep_at(kind, dim, a);
  const RMatrixSpec spec = rmatrix_spec(kind, a);
  const auto q = qybe_check(spec, rep, guard);
  const auto i = intertwine_check(spec, coproduct_table(kind, a), rep, guard);
  const bool passed = q.passed && i.passed;
  Json j{{"kind", std::string(to_string(kind))},
         {"D", dim},
         {"parameter", a.to_string()},
         {"status", passed ? "pass" : "fail"},
         {"reports", {report_json(q), report_json(i)}}};
  if (o_.dump_matrix)
    j["R"] = matrix_json(twophoton::rmatrix(spec, rep));
  emit(j);
  return passed ? kExitPass : kExitVerificationFailure;
}

Scalar parse_exact(const std::string &text) { return parse_scalar(text); }

double parse_double(const std::string &text) {
  try {
    return parse_scalar(text).to_rational().get_d();
  } catch (const ParseError &) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != text.size() || text.empty())
      throw ParseError("not a number: '" + text + "'");
    return v;
  }
}

template <class T> T parse_value(const std::string &text) {
  if constexpr (std::is_same_v<T, double>)
    return parse_double(text);
  else
    return parse_exact(text);
}

template <class T> int Command::eigenstate_as(RepKind kind) {
  EigenProblem<T> p;
  p.kind = kind;
  if constexpr (std::is_same_v<T, double>)
    p.parameter = parse_double(deformation_text(kind));
  else
    p.parameter = deformation_parameter(kind);
  if (o_.beta.size() != 5)
    throw ParseError("--beta takes five values: N, B-, B+, A-, A+ coefficients");
  for (std::size_t k = 0; k < 5; ++k)
    p.beta[k] = parse_value<T>(o_.beta[k]);
  p.lambda = parse_value<T>(o_.lambda);
  p.order = o_.order;
  const ODESpec<T> ode = ode_from_problem(p);
  const SeriesSolution<T> sol =
      solve_series(ode, parse_value<T>(o_.c0), parse_value<T>(o_.c1), p.order);

  bool passed;
  Json matrix_check;
  if constexpr (std::is_same_v<T, double>) {
    if (o_.check_dim)
      throw ParseError("--check-dim runs in exact mode only");
    passed = sol.residual_norm <= 1e-12;
  } else {
    passed = std::all_of(sol.residual.begin(), sol.residual.end(),
                         [](const Scalar &r) { return r.is_zero(); });
    if (o_.check_dim) {
      const auto r = matrix_residual(p, sol.coeffs, *o_.check_dim);
      passed = passed && r.passed;
      matrix_check = report_json(r);
    }
  }
  if (o_.format == "csv") {
    std::ostringstream os;
    write_series_csv(os, sol.coeffs);
    emit_text(os.str());
  } else {
    Json j = eigenstate_json(p, ode, sol);
    j["status"] = passed ? "pass" : "fail";
    if (!matrix_check.is_null())
      j["matrix_residual"] = matrix_check;
    emit(j);
  }
  return passed ? kExitPass : kExitVerificationFailure;
}

int Command::eigenstate() {
  const RepKind kind = parse_rep_kind(o_.kind);
  return o_.floating ? eigenstate_as<double>(kind) : eigenstate_as<Scalar>(kind);
}

int Command::rep() {
  require_json("rep");
  const RepKind kind = parse_rep_kind(o_.kind);
  const Scalar a = deformation_parameter(kind);
  const std::size_t dim = o_.dim.value_or(8);
  const bool number = o_.basis == "number";
  if (number && o_.exact)
    throw ParseError("number-basis matrices involve square roots; use --float");
  const bool floating = number || o_.floating;
  const TruncRep r = rep_at(kind, dim, a);
  std::vector<Generator> gens(kGenerators.begin(), kGenerators.end());
  if (!o_.generator.empty()) {
    auto g = parse_generator(o_.generator);
    if (!g)
      throw ParseError("unknown generator '" + o_.generator + "'");
    gens = {*g};
  }
  Json mats = Json::object();
  for (Generator g : gens) {
    const ScalarMatrix &m = r[g];
    if (number)
      mats[std::string(name(g))] = matrix_json(to_number_basis(m));
    else if (floating)
      mats[std::string(name(g))] =
          matrix_json(m.map([](const Scalar &s) { return s.to_rational().get_d(); }));
    else
      mats[std::string(name(g))] = matrix_json(m);
  }
  emit({{"kind", std::string(to_string(kind))},
        {"D", dim},
        {"parameter", a.to_string()},
        {"basis", o_.basis},
        {"mode", floating ? "float" : "exact"},
        {"matrices", mats}});
  return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
  Options o;
  CLI::App app{"Exact workbench for the two-photon algebra, its bialgebras and deformations",
               "twophoton"};
  app.require_subcommand(1);

  auto *classify = app.add_subcommand("classify", "Evaluate the classification equations");
  classify->add_option("input", o.input, "Parameter JSON file, - for stdin");
  classify->add_option("--json", o.inline_json, "Inline parameter JSON");

  auto *family = app.add_subcommand("family", "Parameters of a two-primitive family");
  family->add_option("kind", o.kind, "I-standard, I-nonstandard, II, III-standard, III-nonstandard")
      ->required();

  auto *cocomm = app.add_subcommand("cocommutator", "Cocommutator table of a bialgebra");
  cocomm->add_option("input", o.input, "Parameter JSON file, - for stdin");
  cocomm->add_option("--json", o.inline_json, "Inline parameter JSON");
  cocomm->add_option("--generator", o.generator, "Single generator");

  auto *verify = app.add_subcommand("verify", "Relation and coproduct checks on a truncated rep");
  verify->add_option("kind", o.kind, "classical, ua1 or ua2")->required();
  verify->add_option("--checks", o.checks,
                     "relations, hom, coassoc, qybe, intertwine, semiclassical")
      ->delimiter(',');

  auto *rmat = app.add_subcommand("rmatrix", "Yang-Baxter and intertwining checks of R");
  rmat->add_option("kind", o.kind, "ua1 or ua2")->required();
  rmat->add_flag("--matrix", o.dump_matrix, "Include R in the output");

  auto *eigen = app.add_subcommand("eigenstate", "Series solution of the eigenstate equation");
  eigen->add_option("kind", o.kind, "classical, ua1 or ua2")->required();
  eigen->add_option("--beta", o.beta, "Coefficients of N, B-, B+, A-, A+")
      ->delimiter(',')
      ->required();
  eigen->add_option("--lambda", o.lambda, "Eigenvalue");
  eigen->add_option("--c0", o.c0, "f(0)");
  eigen->add_option("--c1", o.c1, "f'(0)");
  eigen->add_option("--check-dim", o.check_dim, "Also check against the matrix operator at D");

  auto *rep = app.add_subcommand("rep", "Generator matrices of a truncated representation");
  rep->add_option("kind", o.kind, "classical, ua1 or ua2")->required();
  rep->add_option("--basis", o.basis, "monomial or number")
      ->check(CLI::IsMember({"monomial", "number"}));
  rep->add_option("--generator", o.generator, "Single generator");

  for (auto *cmd : {classify, family, cocomm, verify, rmat, eigen, rep})
    add_common(cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  Command cmd(o, in, out);
  try {
    if (classify->parsed())
      return cmd.classify();
    if (family->parsed())
      return cmd.family();
    if (cocomm->parsed())
      return cmd.cocommutator();
    if (verify->parsed())
      return cmd.verify();
    if (rmat->parsed())
      return cmd.rmatrix();
    if (eigen->parsed())
      return cmd.eigenstate();
    return cmd.rep();
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConstraintError &e) {
    err << "constraint error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception &e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

} // namespace twophoton
