#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "ratsub/cli.hpp"
#include "ratsub/io.hpp"
#include "ratsub/random.hpp"

using namespace th;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ratsub");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RATSUB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("parser accepts the documented grammar") {
  CHECK(P("x^2-20*x").coeffs() == std::vector<Rational>{0, -20, 1});
  CHECK(P("(2*y-5)^2", kQ, "y").coeffs() == std::vector<Rational>{25, -20, 4});
  CHECK(P("y^4+y^3-y^2-y+1", kQ, "y").coeffs() == std::vector<Rational>{1, -1, -1, 1, 1});
  CHECK(P("x^2 - 20 * x") == P("x*x-20*x"));
  CHECK(P("-x+1") == P("1-x"));
  CHECK(P("(x-1)^2") == P("x^2-2*x+1"));
  CHECK(P("3/6*x") == P("1/2*x"));
  CHECK(P("-(x)") == P("-1*x"));
  CHECK(P("t^2", kQ, "t") == P("x^2"));
  CHECK(P("x^0") == P("1"));
  CHECK(P("0").is_zero());
  CHECK(P<ModP>("1/2", FieldSpec::prime(7)) == P<ModP>("4", FieldSpec::prime(7)));
  CHECK(parse_scalar<Rational>("-5/2", kQ) == Rational(-5, 2));
  CHECK(parse_scalar<Rational>("(1/2)^2", kQ) == Rational(1, 4));
}

TEST_CASE("parser errors carry positions") {
  auto pos_of = [](const std::string& s) -> long {
    try {
      P(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos_of("x+") == 2);
  CHECK(pos_of("x + y") == 4);
  CHECK(pos_of("2x") == 1);
  CHECK(pos_of("(x") == 2);
  CHECK(pos_of("x^") == 2);
  CHECK(pos_of("1/0") >= 0);
  CHECK(pos_of("") == 0);
  CHECK(pos_of("x^99999") >= 0);
  CHECK_THROWS_AS(P<ModP>("1/7", FieldSpec::prime(7)), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("x", kQ), ParseError);
}

TEST_CASE("printing round trips through the parser") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const PQ p = random_poly<Rational>(rng, kQ, static_cast<int>(rng.range(0, 5)), -30, 30) *
                 Rational(1, static_cast<long>(rng.range(1, 6)));
    CHECK(P(to_string(p)) == p);
    CHECK(P(to_string(p, "z"), kQ, "z") == p);
  }
  const FieldSpec f7 = FieldSpec::prime(7);
  for (int t = 0; t < 20; ++t) {
    const Poly<ModP> p = random_poly<ModP>(rng, f7, static_cast<int>(rng.range(0, 5)));
    CHECK(P<ModP>(to_string(p), f7) == p);
  }
  CHECK(to_string(P("x^2-20*x")) == "-20*x+x^2");
  CHECK(to_string(P("y-5/2", kQ, "y"), "y") == "-5/2+y");
}

TEST_CASE("problem files round trip") {
  const ProblemFile pf = make_problem<Rational>(intro_p(), nullptr);
  CHECK(read_problem(write_problem(pf)) == pf);
  const auto map = intro_map();
  const ProblemFile pm = make_problem(intro_p(), &map);
  CHECK(read_problem(write_problem(pm)) == pm);
  const Problem<Rational> back = build_problem<Rational>(pm);
  CHECK(back.p == intro_p());
  CHECK(back.p.grade() == 2);
  REQUIRE(back.map.has_value());
  CHECK(*back.map == map);
}

TEST_CASE("problem files reject malformed documents") {
  CHECK_THROWS_AS(read_problem(Json::parse(R"({"matrix": [["x"]]})")), InvalidArgument);
  CHECK_THROWS_AS(read_problem(Json::parse(R"({"field": "Q", "matrix": [["x"], ["1", "2"]]})")), InvalidArgument);
  CHECK_THROWS_AS(read_problem(Json::parse(R"({"field": "Q", "matrix": []})")), InvalidArgument);
  CHECK_THROWS_AS(read_problem(Json::parse(R"({"field": "Q", "matrix": [[true]]})")), InvalidArgument);
  CHECK_THROWS_AS(read_problem(Json::parse(R"({"field": "Q", "matrix": [["x"]], "map": {"n": "y"}})")), InvalidArgument);
  CHECK_THROWS_AS(read_problem(Json::parse(R"([1, 2])")), InvalidArgument);
  const ProblemFile ints = read_problem(Json::parse(R"({"field": "Fp:3", "matrix": [[1, -1]]})"));
  CHECK(build_problem<ModP>(ints).p == M<ModP>({{"1", "2"}}, 0, FieldSpec::prime(3)));
  const ProblemFile bad = read_problem(Json::parse(R"({"field": "Q", "grade": 1, "matrix": [["x^2"]]})"));
  CHECK_THROWS_AS(build_problem<Rational>(bad), InvalidArgument);
}

TEST_CASE("reports round trip") {
  const auto e = complete_eigenstructure(intro_p());
  CHECK(eigenstructure_from_json<Rational>(to_json(e, "x"), kQ, "x") == e);
  const auto r = verify_theorem(intro_p(), intro_map());
  const Json j = to_json(r, "x", "y");
  CHECK(theorem_report_from_json<Rational>(Json::parse(j.dump()), kQ, "x", "y") == r);
  const FieldSpec f5 = FieldSpec::prime(5);
  const RationalMap<ModP> m5(P<ModP>("y^2+1", f5, "y"), P<ModP>("1", f5, "y"));
  const auto r5 = verify_theorem(chain_p<ModP>(f5), m5);
  CHECK(theorem_report_from_json<ModP>(to_json(r5, "x", "y"), f5, "x", "y") == r5);
  const PM q = phi_matrix(intro_p(), intro_map());
  CHECK(polymatrix_from_json<Rational>(to_json(q, "y"), kQ, "y", q.grade()) == q);
  CHECK(charpoint_from_json<Rational>(to_json(CharPoint<Rational>::infinity(), "x"), kQ, "x").is_infinity());
}

TEST_CASE("commands on the bundled problems") {
  const Run v = run({"verify", data("intro.json")});
  CHECK(v.code == kExitOk);
  const Json jv = Json::parse(v.out);
  CHECK(jv["report"]["verdict"] == true);
  CHECK(jv["report"]["G"] == 2);

  const Run pre = run({"preimage", data("intro.json"), "--at", "20"});
  CHECK(pre.code == kExitOk);
  const Json jp = Json::parse(pre.out)["preimage"];
  REQUIRE(jp["entries"].size() == 1);
  CHECK(jp["entries"][0]["point"] == "-5/2+y");
  CHECK(jp["entries"][0]["value"] == "5/2");
  CHECK(jp["entries"][0]["multiplicity"] == 2);
  CHECK(run({"preimage", data("intro.json"), "--at", "inf"}).code == kExitOk);

  const Run eig = run({"eig", data("zero.json")});
  CHECK(eig.code == kExitOk);
  CHECK(Json::parse(eig.out)["eigenstructure"]["right_indices"] == Json::parse("[0, 0]"));

  const Run mb = run({"minbasis", data("chain.json")});
  CHECK(mb.code == kExitOk);
  CHECK(Json::parse(mb.out)["basis"]["indices"] == Json::parse("[2]"));
  CHECK(Json::parse(mb.out)["basis"]["vectors"][0] == Json::parse(R"(["1", "4*x", "x^2", "0"])"));
  CHECK(run({"minbasis", data("intro.json"), "--side", "left"}).code == kExitOk);
  CHECK(run({"smith", data("intro.json")}).code == kExitOk);
  CHECK(run({"transform", data("chain.json")}).code == kExitOk);
}

TEST_CASE("command errors map to exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
  CHECK(run({"verify", data("missing.json")}).code == kExitInput);
  CHECK(run({"verify", data("zero.json")}).code == kExitInput);  // no map
  CHECK(run({"preimage", data("intro.json"), "--at", "1/0"}).code == kExitInput);
  CHECK(run({"minbasis", data("intro.json"), "--side", "up"}).code == kExitInput);
  const Run bad = run({"minbasis", data("chain.json"), "--degree-cap", "1"});
  CHECK(bad.code == kExitFalse);
  CHECK(bad.err.find("internal error") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("selftest is deterministic") {
  const std::vector<std::string> args{"selftest", "--cases", "3", "--seed", "4", "--max-dim", "2", "2", "--max-deg", "2",
                                      "--field", "Fp:5"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["passed"] == true);
  CHECK(run({"selftest", "--field", "Fp:4"}).code == kExitInput);
}
