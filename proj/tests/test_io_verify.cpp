#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "pba/io.hpp"

namespace pba {

TEST_CASE("rational strings and float formatting", "[io]") {
  REQUIRE(io::rational_string(Rational(3)) == "3/1");
  REQUIRE(io::rational_string(parse_rational("-4/6")) == "-2/3");
  REQUIRE(io::rational_string(Rational(0)) == "0/1");
  REQUIRE(io::dump(io::Json{{"x", 0.1}}) == "{\n  \"x\": 0.10000000000000001\n}\n");
  REQUIRE(io::dump(io::Json::array({1.0 / 3.0, 2})) == "[0.33333333333333331, 2]\n");
  const double x = 2.0 / 7.0;
  REQUIRE(std::stod(io::dump(io::Json(x))) == x);
}

TEST_CASE("algebra and module documents round-trip", "[io]") {
  for (const auto& alg : {from_cayley_table(testing::t3_table()), testing::kl_algebra_of("B2"), testing::dual_numbers()}) {
    const auto doc = io::to_json(alg);
    const auto back = io::algebra_from_json(io::Json::parse(io::dump(doc)));
    REQUIRE(back.labels() == alg.labels());
    REQUIRE(back.unit_index() == alg.unit_index());
    REQUIRE(back.constants().size() == alg.constants().size());
    for (std::size_t t = 0; t < alg.constants().size(); ++t) {
      REQUIRE(back.constants()[t].value == alg.constants()[t].value);
      REQUIRE(back.constants()[t].k == alg.constants()[t].k);
    }
    REQUIRE(io::dump(io::to_json(back)) == io::dump(doc));
  }
  const auto t = testing::symmetric3_table();
  const auto m = coset_module(t, {0, testing::index_of(t, "[1,0,2]")});
  const auto back = io::module_from_json(io::Json::parse(io::dump(io::to_json(m))));
  REQUIRE(back.labels == m.labels);
  REQUIRE(back.actions == m.actions);
}

TEST_CASE("input documents", "[io]") {
  const auto t = io::cayley_from_json(io::Json::parse(R"({"table": [[0, 1], [1, 0]]})"));
  REQUIRE(t.labels == std::vector<std::string>{"g0", "g1"});
  REQUIRE(is_group_table(t));
  const auto gens = io::transformations_from_json(io::Json::parse(R"({"generators": [[1, 0], [0, 0]]})"));
  REQUIRE(monoid_closure(gens).order() == 4);
  REQUIRE(io::cartan_from_json(io::Json::parse("[[2, -1], [-1, 2]]")) == cartan_matrix("A2"));
  REQUIRE(io::cartan_from_json(io::Json::parse(R"({"cartan": [[2, -1], [-2, 2]]})")) == cartan_matrix("B2"));

  const auto kind = [](const char* text) {
    try {
      io::algebra_from_json(io::Json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolated;
  };
  REQUIRE(kind(R"({"dim": 1, "unit_index": 0})") == ErrorKind::ParseError);
  REQUIRE(kind(R"({"dim": 1, "unit_index": 0, "gamma": [[0, 0, 0, "1.5"]]})") == ErrorKind::ParseError);
  REQUIRE(kind(R"({"dim": 1, "unit_index": 0, "gamma": [[0, 0, 3, "1"]]})") == ErrorKind::IndexOutOfRange);
  REQUIRE(kind(R"({"dim": 2, "labels": ["a"], "unit_index": 0, "gamma": []})") == ErrorKind::ParseError);
}

TEST_CASE("run configuration", "[io]") {
  RunConfig cfg;
  io::apply_config(io::Json::parse(R"({"seed": 7, "jobs": 3, "precision": "float",
                                       "tolerances": {"character": 1e-5}, "caps": {"max_dim": 50}})"),
                   cfg);
  REQUIRE(cfg.seed == 7);
  REQUIRE(cfg.jobs == 3);
  REQUIRE(cfg.precision == Precision::Float);
  REQUIRE(cfg.tol.character == 1e-5);
  REQUIRE(cfg.caps.max_dim == 50);
  REQUIRE(cfg.tol.cone == Tolerances{}.cone);
  for (const char* bad : {R"({"seeds": 1})", R"({"jobs": 0})", R"({"tolerances": {"cone": 0}})",
                          R"({"precision": "fast"})", R"({"caps": {"max_rank": -1}})"}) {
    RunConfig c;
    REQUIRE_THROWS_AS(io::apply_config(io::Json::parse(bad), c), Error);
  }
}

TEST_CASE("verify passes on the corpus and is deterministic across jobs", "[verify]") {
  for (const auto& alg : {from_cayley_table(testing::symmetric3_table()), from_cayley_table(testing::t3_table()),
                          testing::kl_algebra_of("A3"), testing::dual_numbers()}) {
    const auto report = verify(CellAnalysis(alg));
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.detail);
      REQUIRE(c.passed);
    }
    RunConfig parallel;
    parallel.jobs = 4;
    REQUIRE(io::dump(io::to_json(verify(CellAnalysis(alg, parallel)))) == io::dump(io::to_json(report)));
  }
}

TEST_CASE("verify reports failures instead of throwing", "[verify]") {
  RunConfig strict;
  strict.tol.character = 1e-300;
  const auto report = verify(CellAnalysis(testing::kl_algebra_of("A2"), strict));
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.failures() > 0);
  const auto first = std::find_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.passed; });
  REQUIRE(first->detail.find("CSampleDisagreement") != std::string::npos);
}

TEST_CASE("exactness checks flag a negative structure constant", "[verify]") {
  // validate fails; the remaining checks still run.
  const PBAlgebra bad({"1", "x"}, 0, {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)},
                                      {1, 1, 1, Rational(-1)}});
  const auto checks = exactness_checks(bad, compute_cells(bad));
  REQUIRE_FALSE(checks.front().passed);
  REQUIRE(checks.front().name == "validate");
}

}  // namespace pba
