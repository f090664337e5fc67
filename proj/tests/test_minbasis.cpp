#include <doctest.h>

#include "helpers.hpp"
#include "ratsub/random.hpp"

using namespace th;

TEST_CASE("right kernel of the chain matrix") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const auto p = chain_p<ModP>(f5);
  const auto b = right_kernel_minimal_basis(p);
  REQUIRE(b.size() == 1);
  CHECK(b.indices == std::vector<int>{2});
  CHECK(b.order() == 2);
  CHECK(b.vectors == M<ModP>({{"1"}, {"4*x"}, {"x^2"}, {"0"}}, 2, f5));
  const auto l = left_kernel_minimal_basis(p);
  CHECK(l.indices == std::vector<int>{0});
  CHECK(forney_check(p, b.vectors).ok);
  CHECK(minimal_indices_oracle(p, 4) == std::vector<int>{2});
}

TEST_CASE("left kernel of the running example") {
  const auto l = left_kernel_minimal_basis(intro_p());
  CHECK(l.indices == std::vector<int>{0, 1});
  CHECK(multiply(transpose(l.vectors), intro_p()).is_zero());
  CHECK(right_kernel_minimal_basis(intro_p()).size() == 0);
  CHECK(minimal_indices_oracle(transpose(intro_p()), 6) == std::vector<int>{0, 1});
}

TEST_CASE("forney criterion") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const auto p = chain_p<ModP>(f5);
  const auto v = right_kernel_minimal_basis(p).vectors;
  PolyMatrix<ModP> xv(f5, v.rows(), 1, 3);
  for (Index i = 0; i < v.rows(); ++i) xv.set(i, 0, v(i, 0) * P<ModP>("x", f5));
  const auto r = forney_check(p, xv);
  CHECK_FALSE(r.ok);
  CHECK(r.minor_gcd == P<ModP>("x", f5));
  PolyMatrix<ModP> bad(f5, 4, 1, 0);
  bad.set(0, 0, P<ModP>("1", f5));
  CHECK_THROWS_AS(forney_check(p, bad), InvalidArgument);
}

TEST_CASE("empty and zero kernels") {
  const PM id = PM::identity(kQ, 3, 1);
  CHECK(right_kernel_minimal_basis(id).size() == 0);
  CHECK(left_kernel_minimal_basis(id).size() == 0);
  const PM z(kQ, 2, 2, 1);
  CHECK(right_kernel_minimal_basis(z).indices == std::vector<int>{0, 0});
  CHECK(left_kernel_minimal_basis(z).indices == std::vector<int>{0, 0});
}

TEST_CASE("degree caps") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const auto p = chain_p<ModP>(f5);
  CHECK(default_degree_cap(p) == 5);
  CHECK_THROWS_AS(minimal_indices_oracle(p, 1), InvalidArgument);
  CHECK_THROWS_AS(right_kernel_minimal_basis(p, 1), InternalError);
}

TEST_CASE("sweep agrees with the oracle") {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    const int m = static_cast<int>(rng.range(1, 3)), p = static_cast<int>(rng.range(2, 4));
    const int r = static_cast<int>(rng.range(0, std::min(m, p - 1)));
    PM a = multiply(random_matrix<Rational>(rng, kQ, m, r, 1), random_matrix<Rational>(rng, kQ, r, p, 2));
    if (r == 0) a = PM(kQ, m, p, 1);
    const auto b = right_kernel_minimal_basis(a);
    CHECK(b.indices == minimal_indices_oracle(a, default_degree_cap(a)));
    CHECK(forney_check(a, b.vectors).ok);
    CHECK(b.size() == p - rank_fraction_field(a));
  }
}

TEST_CASE("bases transform under substitution") {
  const auto map = RationalMap<Rational>(P("y^2+1", kQ, "y"), P("y", kQ, "y"));
  const PM p = M({{"x", "1", "0"}, {"0", "x", "1"}}, 1);
  const auto v = right_kernel_minimal_basis(p);
  CHECK(v.indices == std::vector<int>{2});
  const auto w = transform_minimal_basis(p, v, map);
  CHECK(w.indices == std::vector<int>{4});
  CHECK(multiply(phi_matrix(p, map), w.vectors).is_zero());
}
