#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "trigeom/cli.hpp"
#include "trigeom/errors.hpp"
#include "trigeom/multipoly.hpp"
#include "trigeom/triform.hpp"

using namespace trigeom;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> k;
  for (const auto& [key, value] : j.items()) k.push_back(key);
  return k;
}

}  // namespace

TEST_CASE("poles of T9 over GF(2)") {
  const Run r = run({"poles", "--catalog", "T9", "--field", "gf(2)", "--output", "json"});
  CHECK(r.code == exit_ok);
  const Json j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"form", "field", "n", "poles", "histogram", "upper_radical", "variety"});
  CHECK(j["field"] == "gf(2)");
  CHECK(j["n"] == 7);
  CHECK(j["poles"].size() == 63);
  CHECK(j["histogram"] == Json({{"0", 64}, {"2", 63}}));
  CHECK(j["upper_radical"].size() == 63);
  CHECK(keys(j["variety"])[0] == "i");

  const Run text = run({"poles", "--catalog", "T9", "--field", "gf(2)", "--output", "text"});
  CHECK(text.code == exit_ok);
  CHECK(text.out.find("degree histogram: 0:64 2:63") != std::string::npos);
}

TEST_CASE("variety of T9 over Q") {
  const Run r = run({"variety", "--catalog", "T9", "--field", "q", "--output", "json"});
  CHECK(r.code == exit_ok);
  const Json j = Json::parse(r.out);
  const MultiPoly g = MultiPoly::parse(j["variety"]["g"].get<std::string>(), 7, FieldSpec::rationals());
  CHECK(equal_up_to_scalar(g, MultiPoly::parse("x7^2-x3*x6-x2*x5-x1*x4", 7, FieldSpec::rationals())));
}

TEST_CASE("hexagon check for T12") {
  const Run r = run({"check", "hexagon", "--catalog", "T12", "--param", "2", "--field", "gf(7)", "--output", "json"});
  CHECK(r.code == exit_ok);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["parameter"] == "2");
  CHECK(keys(j)[0] == "check");
}

TEST_CASE("failed checks exit 1 with witnesses") {
  const Run r = run({"check", "spread", "--catalog", "T3", "--field", "gf(2)", "--output", "json"});
  CHECK(r.code == exit_check_failed);
  const Json j = Json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK_FALSE(j["witnesses"].empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"poles"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T9", "--terms", "123", "--field", "gf(2)"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T99", "--field", "gf(2)"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T9", "--field", "gf(4)"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T9", "--field", "q"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T10_1", "--param", "1", "--field", "gf(3)"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T9", "--dim", "6"}).code == exit_usage);
  CHECK(run({"poles", "--catalog", "T9", "--budget", "0"}).code == exit_usage);
  CHECK(run({"poles", "--file", "/nonexistent/form.txt"}).code != exit_ok);
  CHECK(run({"check", "hexagon", "--catalog", "T5", "--field", "gf(2)"}).code == exit_usage);
}

TEST_CASE("budget exceeded exits 3") {
  const Run r = run({"poles", "--catalog", "T9", "--field", "gf(7)", "--budget", "1000"});
  CHECK(r.code == exit_budget);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("forms from files and term lists") {
  const std::string path = "test_cli_form.txt";
  {
    std::ofstream f(path);
    f << "n = 5\nfield = gf(3)\n1 2 3 1\n3 4 5 1\n";
  }
  const Run a = run({"variety", "--file", path, "--output", "json"});
  const Run b = run({"variety", "--terms", "123+345", "--dim", "5", "--field", "gf(3)", "--output", "json"});
  std::remove(path.c_str());
  CHECK(a.code == exit_ok);
  CHECK(b.code == exit_ok);
  CHECK(Json::parse(a.out)["variety"]["g"] == "x3");
  CHECK(Json::parse(b.out)["variety"]["g"] == "x3");

  CHECK(parse_terms("123-2*345", 5, FieldSpec::rationals()).coefficient(2, 3, 4) == Scalar(FieldSpec::rationals(), -2LL));
  CHECK_THROWS(parse_terms("113", 5, FieldSpec::rationals()));
  CHECK_THROWS(parse_terms("12", 5, FieldSpec::rationals()));
}

TEST_CASE("constructions") {
  Run r = run({"construct", "cch", "--dim", "7", "--field", "q", "--output", "text"});
  CHECK(r.code == exit_ok);
  r = run({"construct", "expansion", "--bilinear", "23+45+67", "--direction", "1", "--dim", "7"});
  CHECK(r.code == exit_ok);
  r = run({"construct", "sum", "--terms", "123", "--second", "456", "--dim", "6"});
  CHECK(r.code == exit_ok);
  r = run({"construct", "teleport", "--terms", "123", "--dim", "6"});
  CHECK(r.code == exit_usage);
}

TEST_CASE("other subcommands") {
  CHECK(run({"catalog"}).code == exit_ok);
  CHECK(run({"catalog", "--catalog", "T5"}).code == exit_ok);
  CHECK(run({"radical", "--catalog", "T2", "--dim", "6"}).code == exit_ok);
  CHECK(run({"matrix", "--catalog", "T1", "--dim", "3"}).code == exit_ok);
  CHECK(run({"matrix", "--catalog", "T1", "--dim", "3", "--point", "1,0,0"}).code == exit_ok);
  const Run e = run({"eval", "--catalog", "T1", "--dim", "3", "--x", "1,0,0", "--y", "0,1,0", "--z", "0,0,1"});
  CHECK(e.code == exit_ok);
  CHECK(e.out.find('1') != std::string::npos);
  CHECK(run({"radical-lines", "--catalog", "T9", "--field", "gf(2)", "--point", "1,0,0,0,0,0,0"}).code == exit_ok);
  CHECK(run({"fingerprint", "--catalog", "T7", "--field", "gf(2)"}).code == exit_ok);
  CHECK(run({"tables", "--table", "4"}).code == exit_ok);
  CHECK(run({"tables", "--table", "7"}).code == exit_usage);
}

TEST_CASE("outputs are deterministic and thread-independent") {
  const Run a = run({"poles", "--catalog", "T7", "--field", "gf(3)"});
  const Run b = run({"poles", "--catalog", "T7", "--field", "gf(3)"});
  const Run c = run({"poles", "--catalog", "T7", "--field", "gf(3)", "--threads", "4"});
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}
