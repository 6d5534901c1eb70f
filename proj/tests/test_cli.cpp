#include <doctest.h>

#include "support.hpp"
#include "twophoton/cli.hpp"
#include "twophoton/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twophoton;
using namespace testing_support;
using G = Generator;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parameter documents round-trip") {
  RationalDraw draw(3);
  for (int trial = 0; trial < 10; ++trial) {
    BialgebraParams p;
    for (std::size_t i = 0; i < BialgebraParams::kCount; ++i)
      p.at(i) = Scalar(draw.any());
    p["c2"] = p["c2"] + sym("a1") * sym("b3");
    const Json j = params_json(p);
    CHECK(j.size() == 15);
    CHECK(j.begin().key() == "a1");
    const BialgebraParams back = params_from_json(Json::parse(j.dump()));
    for (std::size_t i = 0; i < BialgebraParams::kCount; ++i)
      CHECK(back.at(i) == p.at(i));
  }
  const BialgebraParams sparse = params_from_json(Json::parse(R"({"b2": 0.25, "c1": "-3/6", "a3": 2})"));
  CHECK(sparse["b2"] == Scalar(make_rational(1, 4)));
  CHECK(sparse["c1"] == Scalar(make_rational(-1, 2)));
  CHECK(sparse["a3"] == Scalar(2));
  CHECK(sparse["a1"].is_zero());
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"d1": 1})")), ParseError);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"a1": true})")), ParseError);
  CHECK_THROWS_AS(params_from_json(Json::parse("[1, 2]")), ParseError);
}

TEST_CASE("tensor and report documents") {
  const Json w = tensor_json(wedge(G::N, G::Ap) + Scalar(make_rational(1, 2)) * wedge(G::Bm, G::M));
  CHECK(w.size() == 2);
  CHECK(w["N^A+"] == "1/1");
  CHECK(w["B-^M"] == "1/2");
  const Json t = tensor_json(TensorElement::product(gen(G::N), gen(G::M)));
  CHECK(t["N(x)M"] == "1/1");

  VerificationReport r;
  r.check = "relations";
  r.kind = "ua1";
  r.dim = 8;
  r.guard = 4;
  r.parameter = "1/2";
  r.passed = true;
  const Json j = report_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["first_failure"].is_null());
  CHECK(j["max_violation_index"].is_null());
  CHECK_FALSE(j.contains("note"));
}

TEST_CASE("series CSV layouts") {
  std::ostringstream exact;
  write_series_csv(exact, std::vector<Scalar>{Scalar(1), Scalar(make_rational(-2, 6))});
  CHECK(exact.str() == "index,numerator,denominator\n0,1,1\n1,-1,3\n");
  std::ostringstream approx;
  const double third = 1.0 / 3;
  write_series_csv(approx, std::vector<double>{third, 0.1});
  std::istringstream lines(approx.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "index,value");
  std::getline(lines, row);
  CHECK(std::stod(row.substr(2)) == third);
  std::getline(lines, row);
  CHECK(std::stod(row.substr(2)) == 0.1);
  CHECK(approx.str().find('\r') == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"nonsense"}).code == kExitInputError);
  CHECK(run({"classify", "--json", R"({"c1": 1, "c2": "1/2"})"}).code == kExitPass);
  CHECK(run({"classify", "--json", R"({"a2": 1, "b2": 1})"}).code == kExitVerificationFailure);
  CHECK(run({"classify", "--json", "{not json"}).code == kExitInputError);
  CHECK(run({"classify", "--json", R"({"z9": 1})"}).code == kExitInputError);
  CHECK(run({"classify", "/nonexistent/params.json"}).code == kExitInputError);
  CHECK(run({"family", "II", "--param", "a1=1", "--param", "b3=2", "--param", "c1=1"}).code ==
        kExitPass);
  CHECK(run({"family", "IV"}).code == kExitInputError);
  CHECK(run({"verify", "ua2", "--dim", "8", "--param", "1/2"}).code == kExitPass);
  CHECK(run({"verify", "ua1", "--dim", "8", "--param", "a1", "--checks", "relations,semiclassical"})
            .code == kExitPass);
  CHECK(run({"verify", "ua1", "--dim", "8", "--param", "1/2", "--checks", "semiclassical"}).code ==
        kExitDomainError);
  CHECK(run({"verify", "ua2", "--dim", "2", "--param", "1/2"}).code == kExitInputError);
  CHECK(run({"rmatrix", "classical"}).code == kExitInputError);
  CHECK(run({"eigenstate", "ua1", "--beta", "1,0,0,0,0", "--param", "1/2"}).code ==
        kExitDomainError);
  CHECK(run({"eigenstate", "classical", "--beta", "1,2"}).code == kExitInputError);
  CHECK(run({"rep", "ua2", "--param", "1/2", "--basis", "number", "--exact"}).code ==
        kExitInputError);
  CHECK(run({"rep", "ua2", "--exact", "--float"}).code == kExitInputError);
}

TEST_CASE("classify reads stdin and reports residuals") {
  const Run r = run({"classify", "-"}, R"({"a2": 1, "b2": 1})");
  REQUIRE(r.code == kExitVerificationFailure);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "not-a-bialgebra");
  CHECK_FALSE(j["failing"].empty());
  CHECK(j["params"]["a2"] == "1/1");
}

TEST_CASE("documents are deterministic and --out matches stdout") {
  const std::vector<std::string> args = {"eigenstate", "ua2",     "--beta", "1/2,1,0,-1,1/3",
                                         "--lambda",   "2",       "--param", "1/4",
                                         "--check-dim", "26"};
  const Run first = run(args), second = run(args);
  CHECK(first.code == kExitPass);
  CHECK(first.out == second.out);
  const auto path = std::filesystem::temp_directory_path() / "twophoton_cli_test.json";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const Run file_run = run(with_out);
  CHECK(file_run.code == kExitPass);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(Json::parse(buf.str()) == Json::parse(first.out));
  std::filesystem::remove(path);
}

TEST_CASE("eigenstate CSV from the command line") {
  const Run r = run({"eigenstate", "classical", "--beta", "0,0,0,1,0", "--lambda", "1", "--order",
                     "5", "--format", "csv"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == "index,numerator,denominator\n0,1,1\n1,1,1\n2,1,2\n3,1,6\n4,1,24\n5,1,120\n");
}
