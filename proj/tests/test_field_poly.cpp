#include <doctest.h>

#include "helpers.hpp"
#include "ratsub/factor.hpp"
#include "ratsub/random.hpp"

using namespace th;

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("Fp:7").modulus() == 7);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:8"), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:1"), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InvalidArgument);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659u), InvalidArgument);
  CHECK(FieldSpec::prime(2).to_string() == "Fp:2");
}

TEST_CASE("modular scalars") {
  const FieldSpec f7 = FieldSpec::prime(7);
  const ModP a = scalar<ModP>(f7, -1);
  CHECK(a.value() == 6);
  CHECK(to_string(a) == "6");
  CHECK((a * a).value() == 1);
  CHECK((inverse(scalar<ModP>(f7, 3)) * scalar<ModP>(f7, 3)).value() == 1);
  CHECK_THROWS_AS(inverse(scalar<ModP>(f7, 0)), DivisionByZero);
  CHECK_THROWS_AS(ScalarTraits<ModP>::from_rational(f7, mpq_class(1, 7)), DivisionByZero);
  CHECK(ScalarTraits<ModP>::from_rational(f7, mpq_class(1, 2)).value() == 4);
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(scalar<ModP>(f7, 1) + scalar<ModP>(f5, 1), FieldMismatch);
  // an unbound zero adopts the other modulus
  CHECK((ModP() + scalar<ModP>(f5, 3)).modulus() == 5);
}

TEST_CASE("rational printing is canonical") {
  CHECK(to_string(parse_scalar<Rational>("-10/4", kQ)) == "-5/2");
  CHECK(to_string(parse_scalar<Rational>("6/3", kQ)) == "2");
  CHECK(to_string(Rational(3) / Rational(-6)) == "-1/2");
  // unreduced input is reduced on the way into a polynomial
  const PQ p(kQ, {Rational(6, 4), Rational(3, 3)});
  CHECK(to_string(p) == "3/2+x");
  CHECK(factor_irreducible(p).factors.at(0).base == P("x+3/2"));
  CHECK_THROWS_AS(inverse(Rational(0)), DivisionByZero);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(P("x-20") * P("x") == P("x^2-20*x"));
  const DivMod<Rational> qr = divmod(P("x^2-20*x"), P("x-20"));
  CHECK(qr.quotient == P("x"));
  CHECK(qr.remainder.is_zero());
  CHECK(monic(P("2*x^2-2")) == P("x^2-1"));
  CHECK(primitive_part(P("1/2*x^2-3/4")) == P("2*x^2-3"));
  CHECK(derivative(P("x^3+x")) == P("3*x^2+1"));
  CHECK(P("0").degree() == -1);
  CHECK(P("x^2+x").valuation() == 1);
  CHECK_THROWS_AS(divmod(P("x"), P("0")), DivisionByZero);
  CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x")), InvalidArgument);
}

TEST_CASE("field mismatch between polynomials") {
  const Poly<ModP> a = P<ModP>("x+1", FieldSpec::prime(7));
  const Poly<ModP> b = P<ModP>("x+1", FieldSpec::prime(5));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("extended gcd") {
  auto [g, u, v] = gcd_extended(P("x^2-20*x"), P("x-20"));
  CHECK(g == P("x-20"));
  auto e = gcd_extended(P("x"), P("1"));
  CHECK(e.g == P("1"));
  CHECK(e.u.is_zero());
  CHECK(e.v == P("1"));
  const PQ n = P("16*x^2-25"), d = P("x^2-x");
  auto c = gcd_extended(n, d);
  CHECK(c.g == P("1"));
  CHECK(c.u * n + c.v * d == P("1"));
  CHECK_THROWS_AS(gcd_extended(P("0"), P("0")), InvalidArgument);
  CHECK(gcd(P("0"), P("0")).is_zero());
  CHECK(lcm(P("x^2-1"), P("x+1")) == P("x^2-1"));
}

TEST_CASE("reversal") {
  CHECK(reversal(P("x-20"), 2) == P("-20*x^2+x"));
  CHECK(reversal(P("7"), 0) == P("7"));
  CHECK(reversal(P("x^4+x^3-x^2-x+1"), 4) == P("x^4-x^3-x^2+x+1"));
  CHECK_THROWS_AS(reversal(P("x^3"), 2), InvalidArgument);
}

TEST_CASE("evaluation and taylor coefficients") {
  CHECK(evaluate(P("x^2-20*x"), Rational(16)) == Rational(-64));
  CHECK(evaluate(P("x^2-20*x"), Rational(20)) == Rational(0));
  CHECK(evaluate(P("x^2-20*x"), Rational(0)) == Rational(0));
  const std::vector<Rational> t = taylor_coeffs(P("x^2"), Rational(1));
  REQUIRE(t.size() == 3);
  CHECK(t[0] == 1);
  CHECK(t[1] == 2);
  CHECK(t[2] == 1);
  CHECK(multiplicity(P("(x-1)^3*(x+2)"), P("x-1")).first == 3);
}

TEST_CASE("squarefree decomposition") {
  const Factorization<Rational> a = squarefree_decompose(P("(x-1)^2*(x+1)"));
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0].base == P("x+1"));
  CHECK(a.factors[0].exponent == 1);
  CHECK(a.factors[1].base == P("x-1"));
  CHECK(a.factors[1].exponent == 2);
  const Factorization<Rational> b = squarefree_decompose(P("x^2"));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0].exponent == 2);
  const Factorization<Rational> c = squarefree_decompose(P("(2*y-5)^2", kQ, "y"));
  CHECK(c.unit == Rational(4));
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].base == P("x-5/2"));
  CHECK_THROWS_AS(squarefree_decompose(P("0")), InvalidArgument);

  // characteristic p: x^7 + 1 = (x+1)^7 over F7
  const FieldSpec f7 = FieldSpec::prime(7);
  const Factorization<ModP> d = squarefree_decompose(P<ModP>("x^7+1", f7));
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].exponent == 7);
  const Poly<ModP> e = P<ModP>("(x^2+1)^7*(x+3)^2*x", f7);
  CHECK(squarefree_decompose(e).expand(f7) == e);
}

TEST_CASE("factorization over Q") {
  CHECK(is_irreducible(P("x^2+2")));
  CHECK(is_irreducible(P("x^4+2")));
  CHECK(is_irreducible(P("x^4-10*x^2+1")));
  const Factorization<Rational> f = factor_irreducible(P("x^4-1"));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].base == P("x-1"));
  CHECK(f.factors[1].base == P("x+1"));
  CHECK(f.factors[2].base == P("x^2+1"));

  // planted products of known irreducibles
  const std::vector<PQ> irr = {P("x-3"), P("x+1/2"), P("x^2+1"), P("x^2-2"), P("x^3-2"), P("x^2+x+1"), P("x^4+2")};
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::pair<PQ, int>> want;
    PQ prod = PQ::constant(kQ, Rational(static_cast<long>(rng.range(1, 9))) / Rational(3));
    for (const auto& q : irr) {
      const int e = rng.chance(1, 3) ? static_cast<int>(rng.range(1, 2)) : 0;
      if (e == 0) continue;
      want.emplace_back(q, e);
      prod *= pow(q, e);
    }
    if (prod.degree() < 1) continue;
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    const Factorization<Rational> got = factor_irreducible(prod);
    REQUIRE(got.factors.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(got.factors[k].base == want[k].first);
      CHECK(got.factors[k].exponent == want[k].second);
    }
    CHECK(got.expand(kQ) == prod);
  }
}

TEST_CASE("factorization over small prime fields matches trial division") {
  Rng rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec fp = FieldSpec::prime(p);
    for (int t = 0; t < 25; ++t) {
      const Poly<ModP> f = random_poly<ModP>(rng, fp, static_cast<int>(rng.range(1, 9)), 0, p - 1);
      const auto want = trial_factor(f, p);
      const Factorization<ModP> got = factor_irreducible(f);
      REQUIRE(got.factors.size() == want.size());
      for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(got.factors[k].base == want[k].first);
        CHECK(got.factors[k].exponent == want[k].second);
      }
    }
  }
}

TEST_CASE("factorization over a large prime") {
  const FieldSpec fp = FieldSpec::prime(65521);
  const Poly<ModP> f = P<ModP>("(x^2+3)*(x-5)^2*(x^3+x+1)", fp);
  const Factorization<ModP> g = factor_irreducible(f);
  CHECK(g.expand(fp) == f);
  for (const auto& fac : g.factors) CHECK(is_irreducible(fac.base));
}
