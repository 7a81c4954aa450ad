#include "relab/cli/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using relab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check gp2") {
  Result r = call({"check", "--fixture", "gp2", "--axiom", "separate", "--axiom", "continuity", "--resolution", "1e-3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("tool_version"));
  CHECK(j.at("spec").at("fixture") == "gp2");
  REQUIRE(j.at("verdicts").size() == 2);
  for (const auto& v : j.at("verdicts")) {
    if (v.at("axiom") == "separate") CHECK(v.at("kind") == "holds");
    if (v.at("axiom") == "continuity") {
      CHECK(v.at("kind") == "violated");
      const auto& w = v.at("witness");
      CHECK(w.at("type") == "closure");
      auto roles = w.at("roles").get<std::vector<std::string>>();
      auto at = std::find(roles.begin(), roles.end(), "limit") - roles.begin();
      CHECK(w.at("points").at(at) == nlohmann::json::array({0.0, 0.0}));
      CHECK(!w.at("comparisons").empty());
    }
  }
  CHECK(j.at("timing_ms").is_null());
}

TEST_CASE("identical argv gives identical bytes") {
  std::vector<std::string> args{"check", "--fixture", "lex", "--seed", "4"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("represent") {
  Result r = call({"represent", "--expr", "x1+x2", "--dim", "2", "--box", "0,2", "--pitch", "0.5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,x2,t");
  int rows = 0;
  while (std::getline(in, line)) {
    double x1, x2, t;
    char c1, c2;
    std::istringstream row(line);
    row >> x1 >> c1 >> x2 >> c2 >> t;
    CHECK(t == doctest::Approx((x1 + x2) / 4).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 25);
}

TEST_CASE("curve") {
  Result r = call({"curve", "--expr", "x1+x2", "--dim", "2", "--box", "0,2", "--point", "1,0.5", "--pitch", "0.5"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,x2");
  int rows = 0;
  while (std::getline(in, line)) {
    double x1, x2;
    char c;
    std::istringstream row(line);
    row >> x1 >> c >> x2;
    CHECK(x1 + x2 == doctest::Approx(1.5));
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("implications") {
  Result r = call({"implications", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("edges").size() == 10);
  Result t = call({"implications", "--fixture", "linear_sum", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("finite_clique") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"check"}).code == 2);
  CHECK(call({"check", "--fixture", "nope"}).code == 2);
  CHECK(call({"check", "--fixture", "gp2", "--axiom", "bogus"}).code == 2);
  CHECK(call({"check", "--fixture", "gp2", "--expr", "x1", "--dim", "1", "--box", "0,1"}).code == 2);
  CHECK(call({"check", "--fixture", "gp2", "--format", "xml"}).code == 2);
  CHECK(call({"check", "--fixture", "gp2", "--resolution", "-1"}).code == 2);
  CHECK(call({"represent", "--expr", "x1", "--dim", "2", "--box", "0,1;2"}).code == 2);
  Result bad = call({"check", "--expr", "x1+", "--dim", "2", "--box", "0,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1, column 4") != std::string::npos);
}

TEST_CASE("out path") {
  const std::string path = "relab_cli_test_out.csv";
  Result r = call({"represent", "--expr", "x1", "--dim", "1", "--box", "0,1", "--pitch", "0.5", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "x1,t");
  std::remove(path.c_str());
}

TEST_CASE("corpus text exits 0") {
  Result r = call({"corpus", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("corpus: ok") != std::string::npos);
}
