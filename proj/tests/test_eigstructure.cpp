#include <doctest.h>

#include "helpers.hpp"
#include "ratsub/random.hpp"

using namespace th;

namespace {

RationalMap<Rational> map_of(const std::string& n, const std::string& d) {
  return RationalMap<Rational>(P(n, kQ, "y"), P(d, kQ, "y"));
}

}  // namespace

TEST_CASE("complete eigenstructure of the running example") {
  const auto e = complete_eigenstructure(intro_p());
  CHECK(e.rank == 3);
  CHECK(e.grade == 2);
  REQUIRE(e.finite.size() == 2);
  CHECK(e.finite[0].base.root() == Rational(20));
  CHECK(e.finite[0].exponents == std::vector<int>{1, 1});
  CHECK(e.finite[1].base.root() == Rational(0));
  CHECK(e.finite[1].exponents == std::vector<int>{1, 2});
  CHECK(e.infinite.empty());
  CHECK(e.right_indices.empty());
  CHECK(e.left_indices == std::vector<int>{0, 1});
  CHECK(e.index_sum() == 6);
}

TEST_CASE("complete eigenstructure of degenerate matrices") {
  const auto z = complete_eigenstructure(PM(kQ, 2, 2, 1));
  CHECK(z.rank == 0);
  CHECK(z.right_indices == std::vector<int>{0, 0});
  CHECK(z.left_indices == std::vector<int>{0, 0});
  CHECK(z.index_sum() == 0);
  const auto c = complete_eigenstructure(M({{"1", "0"}, {"0", "1"}}, 2));
  CHECK(c.infinite == std::vector<int>{2, 2});
  CHECK(c.finite.empty());
}

TEST_CASE("index sum holds on random inputs") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const PM a = random_matrix<Rational>(rng, kQ, static_cast<int>(rng.range(1, 3)), static_cast<int>(rng.range(1, 3)),
                                         static_cast<int>(rng.range(1, 2)));
    const PM b = a.with_grade(a.grade() + static_cast<int>(rng.range(0, 1)));
    const auto e = complete_eigenstructure(b);
    CHECK(e.index_sum() == e.grade * static_cast<int>(e.rank));
  }
}

TEST_CASE("kernel at a point") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const Mat<ModP> k = ker_at_point(chain_p<ModP>(f5), scalar<ModP>(f5, 0));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0).value() == 1);
  CHECK(k(1, 0).value() == 0);
  CHECK(k(2, 0).value() == 0);
  CHECK(ker_at_point(intro_p(), Rational(20)).cols() == 0);
  CHECK(ker_at_point(PM(kQ, 3, 2, 1), Rational(4)).cols() == 2);
}

TEST_CASE("maximal root polynomials") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const auto p8 = chain_p<ModP>(f5);
  const auto r8 = maximal_root_polynomials(p8, scalar<ModP>(f5, 0));
  REQUIRE(r8.size() == 1);
  CHECK(r8[0].order == 1);
  CHECK(is_root_polynomial(p8, r8[0].v, r8[0].x0));
  CHECK(maximal_root_polynomials(p8, scalar<ModP>(f5, 1)).empty());

  const auto at20 = maximal_root_polynomials(intro_p(), Rational(20));
  REQUIRE(at20.size() == 2);
  CHECK(at20[0].order == 1);
  CHECK(at20[1].order == 1);
  const auto at0 = maximal_root_polynomials(intro_p(), Rational(0));
  REQUIRE(at0.size() == 2);
  CHECK(at0[0].order == 1);
  CHECK(at0[1].order == 2);
  for (const auto& r : at0) {
    CHECK(root_poly_order(intro_p(), r.v, r.x0) == r.order);
    CHECK(is_root_polynomial(intro_p(), r.v, r.x0));
  }
  // a constant vector in the kernel at the point is not a root polynomial
  CHECK_FALSE(is_root_polynomial(p8, M<ModP>({{"1"}, {"0"}, {"0"}, {"0"}}, 0, f5), scalar<ModP>(f5, 0)));
  CHECK(root_poly_order(p8, M<ModP>({{"1"}, {"4*x"}, {"x^2"}, {"0"}}, 2, f5), scalar<ModP>(f5, 0)) == -1);
}

TEST_CASE("root polynomial transport") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const auto p8 = chain_p<ModP>(f5);
  const RationalMap<ModP> map(P<ModP>("y^2+1", f5, "y"), P<ModP>("1", f5, "y"));
  const auto rp = maximal_root_polynomials(p8, scalar<ModP>(f5, 0)).at(0);
  const auto t = transform_root_polynomial(p8, rp, map, scalar<ModP>(f5, 2));
  CHECK(t.m0 == 1);
  CHECK(t.ell == 1);
  CHECK(t.consistent);
  CHECK(t.outside_kernel);
  CHECK(t.measured == t.m0 * t.truncated_order);
  CHECK_THROWS_AS(transform_root_polynomial(p8, rp, map, scalar<ModP>(f5, 0)), InvalidArgument);

  const auto r = maximal_root_polynomials(intro_p(), Rational(20));
  const auto u = transform_root_polynomial(intro_p(), r.at(0), intro_map(), Rational(5, 2));
  CHECK(u.m0 == 2);
  CHECK(u.consistent);
  CHECK(u.outside_kernel);
  CHECK(u.predicted == 2);
  CHECK(u.measured == 2);
}

TEST_CASE("verifier on the running example") {
  const auto r = verify_theorem(intro_p(), intro_map());
  CHECK(r.verdict);
  CHECK(r.G == 2);
  CHECK(r.grade_q == 4);
  CHECK(r.rank_p == 3);
  CHECK(r.rank_q == 3);
  CHECK(r.identity);
  CHECK(r.exhaustive);
  CHECK(r.converse);
  CHECK(r.left.x_indices == std::vector<int>{0, 1});
  CHECK(r.left.y_indices == std::vector<int>{0, 2});
  CHECK(r.left.ok);
  CHECK(r.right.x_indices.empty());
  bool saw20 = false;
  int at0 = 0;
  for (const auto& rec : r.records) {
    CHECK(rec.ok);
    if (!rec.x_base.is_infinity() && rec.x_base.root() == Rational(20)) {
      saw20 = true;
      CHECK(rec.y_base.root() == Rational(5, 2));
      CHECK(rec.multiplicity == 2);
      CHECK(rec.x_exponents == std::vector<int>{0, 1, 1});
      CHECK(rec.predicted == std::vector<int>{0, 2, 2});
      CHECK(rec.observed == rec.predicted);
    }
    if (!rec.x_base.is_infinity() && rec.x_base.root() == Rational(0)) {
      ++at0;
      CHECK(rec.multiplicity == 1);
      CHECK(rec.predicted == std::vector<int>{0, 1, 2});
    }
  }
  CHECK(saw20);
  CHECK(at0 == 2);
}

TEST_CASE("verifier on other inputs") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const RationalMap<ModP> map(P<ModP>("y^2+1", f5, "y"), P<ModP>("1", f5, "y"));
  const auto r = verify_theorem(chain_p<ModP>(f5), map);
  CHECK(r.verdict);
  CHECK(r.right.y_indices == std::vector<int>{4});
  CHECK(r.left.y_indices == std::vector<int>{0});

  const auto z = verify_theorem(PM(kQ, 2, 2, 1), map_of("y^2", "y+1"));
  CHECK(z.verdict);
  CHECK(z.rank_q == 0);

  // an invariant polynomial of degree above the grade gives a negative internal exponent
  const auto n = verify_theorem(M({{"x", "1"}, {"0", "x"}}, 1), map_of("y^2+1", "y"));
  CHECK(n.verdict);
  CHECK(n.internal_exponents == std::vector<int>{1, -1});
  CHECK(n.infinite_p == std::vector<int>{0, 0});

  const auto inf = verify_theorem(M({{"1", "0"}, {"0", "x"}}, 2), map_of("y^3", "y-1"));
  CHECK(inf.verdict);
  CHECK(inf.infinite_p == std::vector<int>{1, 2});
}

TEST_CASE("squares split or stay irreducible") {
  const auto r = verify_theorem(M({{"x^2-1"}}, 2), map_of("y^2", "1"));
  CHECK(r.verdict);
  CHECK(r.invariants_q == std::vector<PQ>{P("y^4-1", kQ, "y")});
  int seen = 0;
  for (const auto& rec : r.records) {
    if (rec.x_base.is_infinity() || rec.y_base.is_infinity()) continue;
    if (rec.x_base.root() == 1) {
      CHECK(rec.y_base.is_linear());
      CHECK(rec.predicted == std::vector<int>{1});
      ++seen;
    } else if (rec.x_base.root() == -1) {
      CHECK(rec.y_base.base() == P("y^2+1", kQ, "y"));
      CHECK(rec.predicted == std::vector<int>{1});
      ++seen;
    }
  }
  CHECK(seen == 3);
}

TEST_CASE("identity map changes nothing") {
  const auto id = map_of("y", "1");
  CHECK(phi_matrix(intro_p(), id) == M({{"y^2-20*y", "0", "0"}, {"y-20", "y^2-20*y", "0"}, {"0", "0", "y"}, {"0", "0", "y^2"}, {"0", "0", "0"}}, 2, kQ, "y"));
  CHECK(verify_theorem(intro_p(), id).verdict);
  CHECK(verify_mobius_roundtrip(intro_p(), id).ok());
}

TEST_CASE("mobius round trips") {
  const auto shifted = complete_eigenstructure(phi_matrix(intro_p(), map_of("y+1", "1")));
  REQUIRE(shifted.finite.size() == 2);
  CHECK(shifted.finite[0].base.root() == Rational(19));
  CHECK(shifted.finite[0].exponents == std::vector<int>{1, 1});
  CHECK(shifted.finite[1].base.root() == Rational(-1));
  CHECK(shifted.finite[1].exponents == std::vector<int>{1, 2});
  CHECK(shifted.left_indices == std::vector<int>{0, 1});
  const auto a = verify_mobius_roundtrip(intro_p(), map_of("y+1", "1"));
  CHECK(a.ok());
  const auto b = verify_mobius_roundtrip(M({{"x"}}, 1), map_of("1", "y"));
  CHECK(b.ok());
  const auto q = phi_matrix(M({{"x"}}, 1), map_of("1", "y"));
  CHECK(q == M({{"1"}}, 1, kQ, "y"));
  CHECK(complete_eigenstructure(q).infinite == std::vector<int>{1});
  const auto c = verify_mobius_roundtrip(intro_p(), map_of("2*y-1", "y+3"));
  CHECK(c.ok());
  CHECK_THROWS_AS(verify_mobius_roundtrip(intro_p(), intro_map()), InvalidArgument);
}

TEST_CASE("coprime base") {
  const auto b = coprime_base<Rational>({P("x^2-1"), P("x-1"), P("(x+1)^3*(x^2+1)")});
  REQUIRE(b.size() == 3);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(gcd(b[i], b[j]) == P("1"));
  }
  CHECK(coprime_base<Rational>({}).empty());
  CHECK(coprime_base<Rational>({P("3")}).empty());
  const auto g = coprime_base<Rational>({P("x^2*(x-2)"), P("x*(x-2)^2")});
  CHECK(g.size() == 2);
}
