#include <doctest.h>

#include "helpers.hpp"
#include "ratsub/random.hpp"

using namespace th;

namespace {

PQ Y(const std::string& s) { return P(s, kQ, "y"); }

RationalMap<Rational> map_of(const std::string& n, const std::string& d) { return RationalMap<Rational>(Y(n), Y(d)); }

}  // namespace

TEST_CASE("map construction") {
  CHECK(intro_map().G() == 2);
  CHECK(map_of("y", "1").G() == 1);
  CHECK(map_of("y^2+1", "y").G() == 2);
  CHECK_THROWS_AS(map_of("y^2-1", "y-1"), InvalidArgument);
  CHECK_THROWS_AS(map_of("3", "2"), InvalidArgument);
  CHECK_THROWS_AS(map_of("0", "y"), InvalidArgument);
  CHECK_THROWS_AS(map_of("y", "0"), InvalidArgument);
  CHECK(intro_map().value_at_infinity().root() == Rational(16));
  CHECK(map_of("y^2", "1").value_at_infinity().is_infinity());
  CHECK(map_of("1", "y").value_at_infinity().root() == Rational(0));
}

TEST_CASE("scalar substitution") {
  const auto m = intro_map();
  CHECK(phi_scalar(P("x"), 1, m) == Y("16*y^2-25"));
  CHECK(phi_scalar(P("1"), 1, m) == Y("y^2-y"));
  CHECK(phi_scalar(P("x"), 2, m) == Y("(y^2-y)*(16*y^2-25)"));
  CHECK(phi_scalar(P("1"), 0, m) == Y("1"));
  CHECK(phi_scalar(P("x^2-20*x"), 2, m) == Y("(25-16*y^2)*(2*y-5)^2"));
  CHECK_THROWS_AS(phi_scalar(P("x^3"), 2, m), InvalidArgument);
  CHECK(phi_scalar(P("0"), 2, m).is_zero());
}

TEST_CASE("substitution agrees with pointwise evaluation") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto m = random_map<Rational>(rng, kQ, static_cast<int>(rng.range(1, 3)));
    const PQ p = random_poly<Rational>(rng, kQ, static_cast<int>(rng.range(0, 3)));
    const int g = p.degree() + static_cast<int>(rng.range(0, 2));
    const PQ img = phi_scalar(p, g, m);
    CHECK(img.degree() <= g * m.G());
    for (long y = -3; y <= 3; ++y) {
      const Rational dy = evaluate(m.d(), Rational(y));
      if (dy == 0) continue;
      Rational dg = 1;
      for (int k = 0; k < g; ++k) dg *= dy;
      CHECK(evaluate(img, Rational(y)) == dg * evaluate(p, Rational(evaluate(m.n(), Rational(y)) / dy)));
    }
  }
}

TEST_CASE("matrix substitution") {
  const PM q = phi_matrix(intro_p(), intro_map());
  CHECK(q.grade() == 4);
  CHECK(q(2, 2) == Y("(y^2-y)*(16*y^2-25)"));
  CHECK(q(3, 2) == Y("(16*y^2-25)^2"));
  const PM z(kQ, 2, 2, 3);
  const PM qz = phi_matrix(z, intro_map());
  CHECK(qz.is_zero());
  CHECK(qz.grade() == 6);
  const PM id = PM::identity(kQ, 2, 1);
  const PM qi = phi_matrix(id, map_of("y^2", "1"));
  CHECK(qi == PM::identity(kQ, 2));
  CHECK(qi.grade() == 2);
}

TEST_CASE("degree bound") {
  const auto r = degree_bound(intro_p(), intro_map());
  CHECK(r.q == 4);
  CHECK(r.attained);
  const auto a = degree_bound(M({{"x"}}, 1), map_of("y^2", "1"));
  CHECK(a.q == 2);
  CHECK(a.attained);
  const auto b = degree_bound(M({{"x"}}, 2), map_of("y^2", "1"));
  // grade slack with N > D: the bound g D + max i (N - D) is already sharp
  CHECK(b.q == 2);
  CHECK(b.attained);
  CHECK(b.reason == DegreeDrop::NgtDGradeSlack);
  CHECK(phi_matrix(M({{"x"}}, 2), map_of("y^2", "1")).degree() == 2);
  // P(xhat) = 0 drops the degree when N = D
  const auto c = degree_bound(M({{"x-16"}}, 1), intro_map());
  CHECK_FALSE(c.attained);
  CHECK(c.reason == DegreeDrop::FactorAtXhat);
  CHECK_THROWS_AS(degree_bound(PM(kQ, 1, 1), intro_map()), InvalidArgument);
}

TEST_CASE("preimage sets") {
  const auto m = intro_map();
  const auto s = preimage_set(m, CharPoint<Rational>::value(kQ, Rational(20)));
  REQUIRE(s.entries.size() == 1);
  CHECK(s.entries[0].point.root() == Rational(5, 2));
  CHECK(s.entries[0].multiplicity == 2);
  CHECK(s.S == 2);
  CHECK_FALSE(s.includes_infinity);
  const auto z = preimage_set(m, CharPoint<Rational>::value(kQ, Rational(0)));
  REQUIRE(z.entries.size() == 2);
  CHECK(z.entries[0].point.root() == Rational(5, 4));
  CHECK(z.entries[1].point.root() == Rational(-5, 4));

  const auto m2 = map_of("y^4+y^3-y^2-y+1", "y^4");
  const auto t1 = preimage_set(m2, CharPoint<Rational>::value(kQ, Rational(1)));
  REQUIRE(t1.entries.size() == 3);
  CHECK(t1.entries[0].point.root() == Rational(1));
  CHECK(t1.entries[0].multiplicity == 2);
  CHECK(t1.entries[1].point.root() == Rational(-1));
  CHECK(t1.entries[1].multiplicity == 1);
  CHECK(t1.entries[2].point.is_infinity());
  CHECK(t1.entries[2].multiplicity == 1);
  const auto ti = preimage_set(m2, CharPoint<Rational>::infinity());
  REQUIRE(ti.entries.size() == 1);
  CHECK(ti.entries[0].point.root() == Rational(0));
  CHECK(ti.entries[0].multiplicity == 4);
}

TEST_CASE("preimage counts match brute force over F_p") {
  const FieldSpec f7 = FieldSpec::prime(7);
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const auto m = random_map<ModP>(rng, f7, static_cast<int>(rng.range(1, 3)));
    const ModP x0 = random_scalar<ModP>(rng, f7);
    const auto s = preimage_set(m, CharPoint<ModP>::value(f7, x0));
    int total = 0;
    for (const auto& e : s.entries) total += e.multiplicity * e.point.degree();
    CHECK(total == m.G());
    // every root in F7 of n - x0 d appears with its multiplicity
    const Poly<ModP> h = m.n() - m.d() * x0;
    for (long y = 0; y < 7; ++y) {
      const int mult = multiplicity(h, Poly<ModP>(f7, {scalar<ModP>(f7, -y), scalar<ModP>(f7, 1)})).first;
      int found = 0;
      for (const auto& e : s.entries) {
        if (e.point.is_linear() && e.point.root() == scalar<ModP>(f7, y)) found = e.multiplicity;
      }
      CHECK(found == mult);
    }
  }
}

TEST_CASE("grouped preimages") {
  const auto g = grouped_preimage(intro_map(), P("x-20"));
  REQUIRE(g.factors.factors.size() == 1);
  CHECK(g.factors.factors[0].base == P("x-5/2"));
  CHECK(g.factors.factors[0].exponent == 2);
  CHECK(g.factors.unit == Rational(1));
  CHECK(g.infinity_multiplicity == 0);
  const auto h = grouped_preimage(map_of("y^2", "1"), P("x^2-1"), false);
  CHECK(h.factors.factors.size() == 3);
  const auto k = grouped_preimage(map_of("y^2", "1"), P("x^2+2"));
  REQUIRE(k.factors.factors.size() == 1);
  CHECK(k.factors.factors[0].base == P("x^4+2"));
  CHECK_THROWS_AS(grouped_preimage(map_of("y^2", "1"), P("x^2-1")), InvalidArgument);
}

TEST_CASE("mobius inverse and duality") {
  // composing a map with its inverse is the identity up to a constant factor
  for (const auto& m : {map_of("y", "1"), map_of("1", "y"), map_of("y+1", "y-1"), map_of("3*y", "2*y+5")}) {
    const auto mi = mobius_inverse(m);
    const PQ comp_n = phi_scalar(mi.n(), 1, m), comp_d = phi_scalar(mi.d(), 1, m);
    CHECK(monic(comp_n) == Y("y"));
    CHECK(comp_d.degree() == 0);
  }
  CHECK(mobius_inverse(map_of("1", "y")) == map_of("1", "y"));
  CHECK_THROWS_AS(mobius_inverse(intro_map()), InvalidArgument);
  CHECK(psi_dual(intro_map()) == map_of("y^2-y", "16*y^2-25"));
  CHECK(psi_dual(psi_dual(intro_map())) == intro_map());
  // Psi applied to the reversal equals Phi applied to P
  CHECK(phi_matrix(reversal_matrix(intro_p()), psi_dual(intro_map())) == phi_matrix(intro_p(), intro_map()));
}

TEST_CASE("point representatives do not matter") {
  // alpha d - beta n for (alpha, beta) and a nonzero multiple give the same set
  const auto m = intro_map();
  const PQ a = m.d() * Rational(20) - m.n();
  const PQ b = m.d() * Rational(60) - m.n() * Rational(3);
  CHECK(monic(a) == monic(b));
}
