#include <random>

#include "doctest.h"
#include "repkit/constructions.hpp"
#include "repkit/generators.hpp"
#include "repkit/reports.hpp"
#include "repkit/serialize.hpp"

using namespace repkit;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::string parse_error_path(const std::string& text) {
  try {
    parse_rep(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("round trips") {
  std::mt19937_64 rng(101);
  for (FieldSpec f : {FieldSpec{}, FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto c = gen::random_cover_rep(gen::random_tree(3, 1 + rng() % 6, rng), f, 3, rng);
      auto back = parse_rep(serialize(c));
      REQUIRE(std::holds_alternative<CoverRep>(back));
      CHECK(std::get<CoverRep>(back) == c);
      auto k = gen::random_kronecker(3, f, 4, rng);
      auto kb = parse_rep(serialize(k));
      REQUIRE(std::holds_alternative<KroneckerRep>(kb));
      CHECK(std::get<KroneckerRep>(kb) == k);
    }
  }
  auto q = Matrix(FieldSpec::rationals(), 1, 1);
  q.set(0, 0, mpq_class(-3, 4));
  KroneckerRep k{2, FieldSpec::rationals(), 1, 1, {q, q}};
  auto j = to_json(k);
  CHECK(j["kronecker"]["matrices"][0][0][0] == "-3/4");
  CHECK(std::get<KroneckerRep>(parse_rep(serialize(k))) == k);
}

TEST_CASE("parse errors point at the offending value") {
  CHECK(parse_error_path("{") == "");
  CHECK(parse_error_path(R"({"kind":"cover","r":3})") == "/field");
  CHECK(parse_error_path(R"({"kind":"torus"})") == "/kind");
  const std::string head = R"({"kind":"cover","r":3,"field":{"type":"prime","p":5},"cover":)";
  CHECK(parse_error_path(head + R"({"vertices":[{"word":[1,1],"dim":1}],"arrows":[]}})") ==
        "/cover/vertices/0/word");
  CHECK(parse_error_path(head + R"({"vertices":[{"word":[],"dim":1},{"word":[1],"dim":1}],)" +
                         R"("arrows":[{"source_word":[],"label":1,"matrix":[[7]]}]}})") ==
        "/cover/arrows/0/matrix/0/0");
  CHECK(parse_error_path(head + R"({"vertices":[{"word":[],"dim":1}],)" +
                         R"("arrows":[{"source_word":[],"label":2,"matrix":[[1]]}]}})") == "/cover/arrows/0");
  CHECK(parse_error_path(R"({"kind":"kronecker","r":2,"field":{"type":"rational"},)"
                         R"("kronecker":{"d1":1,"d2":1,"matrices":[[["1/0"]],[[1]]]}})") ==
        "/kronecker/matrices/0/0/0");
  CHECK(parse_error_path(R"({"kind":"kronecker","r":2,"field":{"type":"prime","p":6},)"
                         R"("kronecker":{"d1":0,"d2":0,"matrices":[[],[]]}})") == "/field/p");
}

TEST_CASE("DOT export") {
  auto one = export_dot(simple_at(Word{}, 3));
  CHECK(count(one, "label=") == 1);
  CHECK(count(one, "->") == 0);
  auto x1 = export_dot(build_X_cover(1, 3));
  CHECK(count(x1, "[label=\"[") == 3);
  CHECK(count(x1, "->") == 2);
  CHECK(x1.find("[label=\"2\"]") != std::string::npos);
  CHECK(x1.find("[label=\"3\"]") != std::string::npos);
  auto a = build_A_tree_rep(1, 4, Word{}, 1);
  auto ad = export_dot(a.rep);
  CHECK(count(ad, "[label=\"[") == 5);
  CHECK(count(ad, "->") == 4);
  CHECK(export_dot(support_tree(a.rep)).find("->") != std::string::npos);
  CHECK(ad == export_dot(a.rep));
}

TEST_CASE("reports are deterministic and fail iff a record fails") {
  SuiteOptions opt;
  opt.seed = 5;
  auto a = run_verify("euler", opt), b = run_verify("euler", opt);
  CHECK(a.dump() == b.dump());
  CHECK(a.passed());
  CHECK(cell_seed(5, "euler") == cell_seed(5, "euler"));
  CHECK(cell_seed(5, "euler") != cell_seed(6, "euler"));
  auto j = a.to_json();
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["checks"][0].contains("paper_anchor"));
  a.checks.push_back({"forced", "a failing record", false, Json::object()});
  CHECK(!a.passed());
  CHECK(a.to_json()["summary"]["failed"] == 1);
  CHECK_THROWS_AS(run_verify("nonsense", opt), std::invalid_argument);
  CHECK_THROWS_AS(run_verify("rank-width", opt), std::invalid_argument);
}
