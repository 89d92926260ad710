#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using bvkit::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return invoke(std::move(args));
}

std::string sample(const std::string& name) { return std::string(BVKIT_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("milnor example") {
  auto r = invoke_json({"milnor", "--vars", "x,y", "--poly", "x^3 - y^2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["subcommand"] == "milnor");
  CHECK(j["result"]["milnor_number"] == 2);
  CHECK(j["result"]["basis"] == Json::array({"1", "x"}));
  CHECK(j["inputs"]["poly"] == "x^3 - y^2");
}

TEST_CASE("inputs are echoed canonically") {
  auto r = invoke_json({"milnor", "--vars", "x,y", "--poly", "-y^2+x^3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["inputs"]["poly"] == "x^3 - y^2");
}

TEST_CASE("parse errors exit 2 and report a column") {
  auto r = invoke({"milnor", "--vars", "x", "--poly", "x^^2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("parse error at column 3") != std::string::npos);
  CHECK(r.err.find("--poly") != std::string::npos);
}

TEST_CASE("bad invocations exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"milnor", "--vars", "x"}).code == 2);
  CHECK(invoke({"milnor", "--vars", "x", "--poly", "x^2", "--bogus", "1"}).code == 2);
  CHECK(invoke({"milnor", "--vars", "x,,y", "--poly", "x"}).code == 2);
  CHECK(invoke({"--format", "yaml", "milnor", "--vars", "x", "--poly", "x"}).code == 2);
  CHECK(invoke({"mc", "equations", "--dgla", "/nonexistent/file.json"}).code == 2);
  CHECK(invoke({"check", "--kind", "nonsense", "--vars", "x"}).code == 2);
}

TEST_CASE("json errors carry a message") {
  auto r = invoke_json({"mc", "equations", "--dgla", "/nonexistent/file.json"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("bv identity check example passes") {
  auto r = invoke_json({"check", "--kind", "bv", "--vars", "x,y", "--c", "1", "--phi", "df:x^3 - y^2",
                        "--samples", "200", "--seed", "7"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["result"]["failures"] == 0);
  CHECK(j["result"]["samples"] == 200);
  CHECK(j["verdicts"]["zero_failures"] == true);
  CHECK_FALSE(j.contains("counterexample"));
}

TEST_CASE("a failed check exits 1 with a counterexample") {
  auto r = invoke_json({"check", "--kind", "lemma_2_13", "--vars", "x,y", "--phi", "x*d(y)", "--samples", "30"});
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["verdicts"]["zero_failures"] == false);
  REQUIRE(j.contains("counterexample"));
  CHECK(j["counterexample"]["lhs"] != j["counterexample"]["rhs"]);
}

TEST_CASE("closed phi passes the same check") {
  auto r = invoke({"check", "--kind", "lemma_2_13", "--vars", "x,y", "--phi", "df:x*y", "--samples", "30"});
  CHECK(r.code == 0);
}

TEST_CASE("json reports are byte identical for the same seed") {
  std::vector<std::string> args = {"check", "--kind", "gerstenhaber", "--vars", "x,y,z", "--samples", "40",
                                   "--seed", "13"};
  auto a = invoke_json(args);
  auto b = invoke_json(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto m1 = invoke_json({"mc", "compare", "--dgla", sample("sl2_plane.json"), "--cutoff", "3"});
  auto m2 = invoke_json({"mc", "compare", "--dgla", sample("sl2_plane.json"), "--cutoff", "3"});
  CHECK(m1.out == m2.out);
}

TEST_CASE("seed changes the samples but not the verdict") {
  auto a = invoke_json({"check", "--kind", "d_squared", "--vars", "x,y", "--phi", "df:x^2*y", "--samples", "10",
                        "--seed", "1"});
  auto b = invoke_json({"check", "--kind", "d_squared", "--vars", "x,y", "--phi", "df:x^2*y", "--samples", "10",
                        "--seed", "2"});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(Json::parse(a.out)["inputs"]["sampler"]["seed"] == 1);
  CHECK(Json::parse(b.out)["inputs"]["sampler"]["seed"] == 2);
}

TEST_CASE("text and json formats agree on the exit code") {
  auto t = invoke({"milnor", "--vars", "x,y", "--poly", "x^2*y"});
  auto j = invoke_json({"milnor", "--vars", "x,y", "--poly", "x^2*y"});
  CHECK(t.code == j.code);
  CHECK(t.out.find("subcommand: milnor") != std::string::npos);
}

TEST_CASE("koszul reports d squared zero") {
  auto r = invoke_json({"koszul", "--vars", "x,y", "--gens", "x;y", "--truncate", "3"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["verdicts"]["d_squared_zero"] == true);
}

TEST_CASE("schouten bracket of vector fields") {
  auto r = invoke_json({"schouten", "--vars", "x,y", "--lhs", "x*@x", "--rhs", "y*@x"});
  REQUIRE(r.code == 0);
  // [x d/dx, y d/dx] = -y d/dx
  CHECK(Json::parse(r.out)["result"]["bracket"] == "-y*@x");
}

TEST_CASE("schouten over an algebroid") {
  // e1 -> x d/dx, e2 -> x d/dy, [e1, e2] = e2
  auto r = invoke_json({"schouten", "--vars", "x,y", "--algebroid", sample("rank2_algebroid.json"), "--lhs", "@e1",
                        "--rhs", "@e2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["result"]["bracket"] == "1*@e2");
}

TEST_CASE("bv applies the operator once and agrees with the form path") {
  auto r = invoke_json({"bv", "--vars", "x,y", "--c", "1", "--phi", "df:x^3 - y^2", "--input", "x*@x^@y"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdicts"]["form_path_agrees"] == true);
  CHECK(j["result"]["phi_closed"] == true);
}

TEST_CASE("mc subactions") {
  auto eq = invoke_json({"mc", "equations", "--dgla", sample("t_squared.json")});
  REQUIRE(eq.code == 0);
  CHECK(Json::parse(eq.out)["result"].contains("equations"));

  auto cmp = invoke_json({"mc", "compare", "--dgla", sample("t_squared.json"), "--cutoff", "4"});
  REQUIRE(cmp.code == 0);
  Json c = Json::parse(cmp.out);
  CHECK(c["verdicts"].size() > 0);

  CHECK(invoke({"mc", "cocycle", "--dgla", sample("t_squared.json"), "--cutoff", "3", "--order", "2", "--element", "e"}).code == 0);
  CHECK(invoke({"mc", "cocycle", "--dgla", sample("t_squared.json"), "--cutoff", "3", "--order", "3", "--element", "e"}).code == 1);
  CHECK(invoke({"mc", "cocycle", "--dgla", sample("t_squared.json"), "--cutoff", "3"}).code == 2);
  CHECK(invoke({"mc", "frobnicate", "--dgla", sample("t_squared.json")}).code == 2);
}

TEST_CASE("deform verdicts") {
  auto r = invoke_json({"deform", "--algebra", sample("dual_numbers.json"), "--perturb",
                        sample("dual_numbers_deformation.json"), "--moduli", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdicts"]["associativity_agreement"] == true);
  CHECK(j["verdicts"]["deformation_agreement"] == true);
  CHECK(j["verdicts"]["moduli_tables_agree"] == true);
  CHECK(j["result"]["deformation"]["maurer_cartan"] == true);
  CHECK(j["result"]["moduli"]["coalgebra"] == Json::array({1, 4}));

  auto bad = invoke_json({"deform", "--algebra", sample("non_associative.json")});
  REQUIRE(bad.code == 0);
  Json b = Json::parse(bad.out);
  CHECK(b["result"]["associative"] == false);
  CHECK(b["verdicts"]["associativity_agreement"] == true);

  CHECK(invoke({"deform", "--algebra", sample("non_associative.json"), "--perturb",
                sample("dual_numbers_deformation.json")})
            .code == 2);
}

TEST_CASE("timing is opt in") {
  auto plain = invoke_json({"milnor", "--vars", "x,y", "--poly", "x^2 + y^2"});
  CHECK_FALSE(Json::parse(plain.out).contains("timing_ms"));
  auto timed = invoke_json({"--timing", "milnor", "--vars", "x,y", "--poly", "x^2 + y^2"});
  CHECK(Json::parse(timed.out).contains("timing_ms"));
}
