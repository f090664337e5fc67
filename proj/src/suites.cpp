#include "ratsub/suites.hpp"

#include <algorithm>
#include <functional>

#include "ratsub/io.hpp"
#include "ratsub/random.hpp"

namespace ratsub {

void SuiteResult::fail(const std::string& msg) {
  ++failures;
  if (messages.size() < 20) messages.push_back(msg);
}

void SuiteResult::note(const std::string& msg) {
  if (messages.size() < 20) messages.push_back(msg);
}

std::uint64_t case_seed(std::uint64_t seed, int index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(index) + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

template <class F>
std::string repro(const PolyMatrix<F>& p, const RationalMap<F>* map) {
  return write_problem(make_problem(p, map)).dump();
}

// Runs fn<Rational> or fn<ModP> for every case, turning exceptions into failures.
template <class Fn>
SuiteResult run_suite(const std::string& name, const SuiteOptions& o, Fn fn) {
  SuiteResult r;
  r.name = name;
  for (int i = 0; i < o.cases; ++i) {
    const FieldSpec field = o.fields[static_cast<std::size_t>(i) % o.fields.size()];
    Rng rng(case_seed(o.seed, i));
    ++r.cases;
    try {
      if (field.is_rationals())
        fn.template operator()<Rational>(rng, field, r, i);
      else
        fn.template operator()<ModP>(rng, field, r, i);
    } catch (const std::exception& e) {
      r.fail("case " + std::to_string(i) + " (" + field.to_string() + "): exception: " + e.what());
    }
  }
  return r;
}

template <class F>
PolyMatrix<F> low_rank(Rng& rng, const FieldSpec& field, Index m, Index p, Index r, int max_deg) {
  if (r == 0) return PolyMatrix<F>(field, m, p);
  const int da = static_cast<int>(rng.range(0, max_deg));
  const PolyMatrix<F> a = random_matrix<F>(rng, field, m, r, da, 1, 5);
  const PolyMatrix<F> b = random_matrix<F>(rng, field, r, p, max_deg - da, 1, 5);
  PolyMatrix<F> out = multiply(a, b);
  out.set_grade(out.degree());
  return out;
}

template <class F>
RationalMap<F> pick_map(Rng& rng, const FieldSpec& field, int max_g, SuiteResult& r) {
  const int g = static_cast<int>(rng.range(1, max_g));
  static const std::vector<MapKind> kinds = {MapKind::Any, MapKind::Any, MapKind::NumeratorHigher,
                                             MapKind::DenominatorHigher, MapKind::Polynomial};
  const MapKind k = rng.pick(kinds);
  RationalMap<F> m = random_map<F>(rng, field, g, k);
  if (m.N() > m.D()) ++r.stats["maps_N_gt_D"];
  if (m.N() < m.D()) ++r.stats["maps_N_lt_D"];
  if (m.N() == m.D()) ++r.stats["maps_N_eq_D"];
  ++r.stats["maps_G" + std::to_string(g)];
  return m;
}

// Theorem-suite instance: planted structure over Q keeps the factorizations
// cheap; over F_p half the instances are unstructured.
template <class F>
PolyMatrix<F> theorem_instance(Rng& rng, const FieldSpec& field, const SuiteOptions& o, const RationalMap<F>& map) {
  const Index m = rng.range(1, o.max_rows), p = rng.range(1, o.max_cols);
  if (field.is_prime() && rng.chance(1, 2)) {
    PolyMatrix<F> a = rng.chance(1, 3) ? low_rank<F>(rng, field, m, p, rng.range(0, std::min(m, p)), o.max_deg)
                                       : random_matrix<F>(rng, field, m, p, o.max_deg);
    a.set_grade(static_cast<int>(rng.range(std::max(a.degree(), 1), std::max(o.max_deg, 1))));
    return a;
  }
  return planted_instance<F>(rng, field, m, p, std::max(o.max_deg, 1), &map);
}

template <class F>
std::vector<int> local_exponents(const PolyMatrix<F>& p, const F& x0) {
  const Poly<F> base(p.field(), {-x0, scalar<F>(p.field(), 1)});
  std::vector<int> out;
  for (const auto& d : invariant_polynomials(p)) {
    if (d.is_zero()) break;
    const int e = multiplicity(d, base).first;
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
PolyMatrix<F> adjugate(const PolyMatrix<F>& b) {
  const Index n = b.rows();
  const FieldSpec& field = b.field();
  if (n == 1) return PolyMatrix<F>::identity(field, 1);
  PolyMatrix<F> adj(field, n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Mat<Poly<F>> sub(n - 1, n - 1);
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          sub(rr, cc++) = b(r, c);
        }
        ++rr;
      }
      Poly<F> cof = determinant(PolyMatrix<F>(field, std::move(sub)));
      adj.set(i, j, (i + j) % 2 == 0 ? cof : -cof);
    }
  }
  return adj;
}

template <class F>
Poly<F> linear(const FieldSpec& field, const F& x0) {
  return Poly<F>(field, {-x0, scalar<F>(field, 1)});
}

}  // namespace

SuiteResult smith_oracle_suite(const SuiteOptions& o) {
  return run_suite("smith_oracle", o, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const Index m = rng.range(1, o.max_rows), p = rng.range(1, o.max_cols);
    const PolyMatrix<F> a = rng.chance(1, 4) ? low_rank<F>(rng, field, m, p, rng.range(0, std::min(m, p)), o.max_deg)
                                             : random_matrix<F>(rng, field, m, p, o.max_deg);
    const SmithDecomposition<F> s = smith_form(a);
    const std::vector<Poly<F>> dd = determinantal_divisors(a);
    std::vector<Poly<F>> expect;
    for (std::size_t k = 0; k < dd.size(); ++k) {
      if (dd[k].is_zero()) {
        expect.push_back(Poly<F>(field));
      } else {
        expect.push_back(monic(exact_div(dd[k], k == 0 ? Poly<F>::one(field) : dd[k - 1])));
      }
    }
    const std::string where = "case " + std::to_string(i) + " (" + field.to_string() + ")";
    if (s.invariants != expect) r.fail(where + ": invariants differ from determinantal ratios: " + repro(a, static_cast<const RationalMap<F>*>(nullptr)));
    if (!is_unimodular(s.A) || !is_unimodular(s.B)) r.fail(where + ": transformation not unimodular");
    for (std::size_t k = 0; k + 1 < s.invariants.size(); ++k) {
      if (!s.invariants[k].is_zero() && !divides(s.invariants[k], s.invariants[k + 1])) {
        r.fail(where + ": divisibility chain broken");
      }
    }
    if (invariant_polynomials(a) != s.invariants) r.fail(where + ": untracked reduction disagrees");
    ++r.stats[field.to_string()];
  });
}

SuiteResult minbasis_oracle_suite(const SuiteOptions& o) {
  return run_suite("minbasis_oracle", o, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const Index m = rng.range(1, o.max_rows), p = rng.range(1, o.max_cols);
    // singular: rank below the column count
    const Index rk = rng.range(0, std::min(m, p - 1));
    const PolyMatrix<F> a = low_rank<F>(rng, field, m, p, rk, o.max_deg);
    const std::string where = "case " + std::to_string(i) + " (" + field.to_string() + ")";
    for (int side = 0; side < 2; ++side) {
      const PolyMatrix<F> b = side == 0 ? a : transpose(a);
      const MinimalBasis<F> mb = right_kernel_minimal_basis(b);
      const std::vector<int> oracle = minimal_indices_oracle(b, default_degree_cap(b));
      if (mb.indices != oracle) {
        r.fail(where + (side == 0 ? ": right" : ": left") + " indices differ from oracle: " +
               repro(a, static_cast<const RationalMap<F>*>(nullptr)));
      }
      if (!forney_check(b, mb.vectors).ok) r.fail(where + ": basis fails Forney's criterion");
      for (int e : mb.indices) {
        if (e > 0) ++r.stats["positive_indices"];
      }
      r.stats["basis_vectors"] += static_cast<int>(mb.size());
    }
  });
}

SuiteResult theorem_suite(const SuiteOptions& o) {
  return run_suite("theorem", o, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const RationalMap<F> map = pick_map<F>(rng, field, o.max_G, r);
    const PolyMatrix<F> a = theorem_instance<F>(rng, field, o, map);
    const TheoremReport<F> rep = verify_theorem(a, map);
    if (a.rows() * a.cols() >= 6) ++r.stats["dims_at_least_6_entries"];
    if (!rep.verdict) {
      r.fail("case " + std::to_string(i) + " (" + field.to_string() + "): verdict false: " + repro(a, &map));
    }
    auto positive = [](const std::vector<int>& v) { return std::any_of(v.begin(), v.end(), [](int e) { return e > 0; }); };
    if (positive(rep.infinite_p)) ++r.stats["infinite_divisors_x"];
    if (positive(rep.infinite_q)) ++r.stats["infinite_divisors_y"];
    if (!rep.notes.empty()) ++r.stats["grouped_fallback"];
    if (!rep.right.x_indices.empty() || !rep.left.x_indices.empty()) ++r.stats["singular"];
  });
}

SuiteResult mobius_suite(const SuiteOptions& o) {
  return run_suite("mobius", o, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const RationalMap<F> map = random_map<F>(rng, field, 1, MapKind::Mobius);
    const PolyMatrix<F> a = theorem_instance<F>(rng, field, o, map);
    const MobiusReport<F> rep = verify_mobius_roundtrip(a, map);
    if (!rep.ok()) {
      r.fail("case " + std::to_string(i) + " (" + field.to_string() + "): exponents " +
             std::to_string(rep.exponents_invariant) + " indices " + std::to_string(rep.indices_invariant) +
             " scalar " + std::to_string(rep.scalar_multiple) + " roundtrip " + std::to_string(rep.roundtrip_exact) +
             ": " + repro(a, &map));
    }
    if (map.D() == 1) ++r.stats["fractional"];
  });
}

SuiteResult structural_suite(const SuiteOptions& o) {
  return run_suite("structural", o, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const std::string where = "case " + std::to_string(i) + " (" + field.to_string() + ")";
    const RationalMap<F> map = pick_map<F>(rng, field, o.max_G, r);
    const PolyMatrix<F> a = theorem_instance<F>(rng, field, o, map);
    const std::string rp = repro(a, &map);
    auto check = [&](bool ok, const std::string& what) {
      ++r.stats[what];
      if (!ok) r.fail(where + ": " + what + " violated: " + rp);
    };

    // images of distinct points are coprime to each other and to d
    const F x0 = random_scalar<F>(rng, field), x1 = x0 + random_nonzero<F>(rng, field);
    const Poly<F> i0 = phi_scalar(linear(field, x0), 1, map), i1 = phi_scalar(linear(field, x1), 1, map);
    check(gcd(i0, map.d()).degree() == 0 && gcd(i0, i1).degree() == 0, "coprime_images");

    // gcd commutes with the substitution
    {
      const Poly<F> c = random_poly<F>(rng, field, static_cast<int>(rng.range(0, 2)));
      const Poly<F> u = c * random_poly<F>(rng, field, static_cast<int>(rng.range(0, 2)));
      const Poly<F> v = c * random_poly<F>(rng, field, static_cast<int>(rng.range(0, 2)));
      const Poly<F> g = gcd(u, v);
      const Poly<F> lhs = gcd(phi_scalar(u, u.degree(), map), phi_scalar(v, v.degree(), map));
      check(lhs == monic(phi_scalar(g, g.degree(), map)), "gcd_commutation");
    }

    // raising the grade by s adds s to every infinite valuation
    for (int s = 0; s <= 2; ++s) {
      const int g = a.degree() + s;
      check(infinite_structure_at_grade(a, g) == elementary_divisors_infinite(a.with_grade(g)), "grade_shift");
    }

    // the substitution is injective at a fixed grade
    {
      PolyMatrix<F> b = a;
      const Index ri = static_cast<Index>(rng.below(static_cast<std::uint64_t>(a.rows())));
      const Index ci = static_cast<Index>(rng.below(static_cast<std::uint64_t>(a.cols())));
      b.set(ri, ci, a(ri, ci) + random_poly<F>(rng, field, static_cast<int>(rng.range(0, a.grade()))));
      check(!(phi_matrix(a, map) == phi_matrix(b, map)), "injectivity");
    }

    // preimage multiplicities add up to G
    for (const CharPoint<F>& t : {CharPoint<F>::value(field, x0), CharPoint<F>::infinity()}) {
      int total = 0;
      for (const auto& e : preimage_set(map, t).entries) total += e.multiplicity * e.point.degree();
      check(total == map.G(), "preimage_count");
    }

    // regular multipliers that are invertible at x0 keep the local structure;
    // x0 is a characteristic value when P has a linear elementary divisor
    F at = x0;
    try {
      for (const auto& grp : elementary_divisors_finite(invariant_polynomials(a))) {
        if (grp.base.is_linear()) {
          at = grp.base.root();
          break;
        }
      }
    } catch (const BoundExceeded&) {
      ++r.stats["factor_budget"];
    }
    const PolyMatrix<F> ma = random_regular_at<F>(rng, field, a.rows(), 1, at);
    const PolyMatrix<F> mb = random_regular_at<F>(rng, field, a.cols(), 1, at);
    const PolyMatrix<F> apb = multiply(multiply(ma, a), mb);
    check(local_exponents(apb, at) == local_exponents(a, at), "regular_multiplier");

    // v is a root polynomial of A P B iff B v is one of P, with the same order
    for (const auto& w : maximal_root_polynomials(apb, at)) {
      const PolyMatrix<F> bv = multiply(mb, w.v);
      check(is_root_polynomial(apb, w.v, at) && is_root_polynomial(a, bv, at) &&
                root_poly_order(a, bv, at) == w.order,
            "root_polynomial_equivalence");
    }
    const PolyMatrix<F> adj = adjugate(mb);
    for (const auto& u : maximal_root_polynomials(a, at)) {
      const PolyMatrix<F> v = multiply(adj, u.v);  // B v = det(B) u
      check(is_root_polynomial(apb, v, at) && root_poly_order(apb, v, at) == u.order, "root_polynomial_equivalence");
    }
    {
      const PolyMatrix<F> v = random_matrix<F>(rng, field, a.cols(), 1, 1);
      const PolyMatrix<F> bv = multiply(mb, v);
      const bool lhs = is_root_polynomial(apb, v, at), rhs = is_root_polynomial(a, bv, at);
      check(lhs == rhs && (!lhs || root_poly_order(apb, v, at) == root_poly_order(a, bv, at)),
            "root_polynomial_equivalence");
    }

    // index sums (complete_eigenstructure throws when they fail)
    try {
      complete_eigenstructure(a);
      complete_eigenstructure(phi_matrix(a, map));
      ++r.stats["index_sum"];
    } catch (const BoundExceeded&) {
      ++r.stats["factor_budget"];
    }
  });
}

SuiteResult root_transport_suite(const SuiteOptions& o) {
  SuiteOptions po = o;
  po.fields.erase(std::remove_if(po.fields.begin(), po.fields.end(), [](const FieldSpec& f) { return !f.is_prime(); }),
                  po.fields.end());
  if (po.fields.empty()) po.fields = {FieldSpec::prime(7)};
  return run_suite("root_transport", po, [&]<class F>(Rng& rng, const FieldSpec& field, SuiteResult& r, int i) {
    const F x0 = random_scalar<F>(rng, field);
    // P with planted powers of (x - x0)
    const Index m = rng.range(1, o.max_rows), p = rng.range(1, o.max_cols);
    PolyMatrix<F> d(field, m, p);
    const Poly<F> lin = linear(field, x0);
    for (Index k = 0; k < std::min(m, p); ++k) {
      Poly<F> e = pow(lin, static_cast<int>(rng.range(0, 3)));
      if (rng.chance(1, 3)) e *= linear(field, random_scalar<F>(rng, field));
      d.set(k, k, e);
    }
    const PolyMatrix<F> a = multiply(multiply(random_unimodular<F>(rng, field, m, 3, 1), d),
                                     random_unimodular<F>(rng, field, p, 3, 1));

    // map whose preimage of x0 splits: n - x0 d = c prod (y - r_j)
    const int g = static_cast<int>(rng.range(1, o.max_G));
    Poly<F> split = Poly<F>::constant(field, random_nonzero<F>(rng, field));
    const int t = static_cast<int>(rng.range(1, g));
    std::vector<F> roots;
    for (int k = 0; k < t; ++k) {
      const F y = (k > 0 && rng.chance(1, 3)) ? roots.back() : random_scalar<F>(rng, field);
      roots.push_back(y);
      split *= linear(field, y);
    }
    Poly<F> den;
    do den = random_poly<F>(rng, field, static_cast<int>(rng.range(0, g)));
    while (gcd(den, split).degree() != 0);
    const RationalMap<F> map(den * x0 + split, den);
    std::sort(roots.begin(), roots.end(), [](const F& u, const F& v) { return compare(u, v) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    const std::string where = "case " + std::to_string(i) + " (" + field.to_string() + ", x0=" + to_string(x0) + ")";
    for (const auto& rp : maximal_root_polynomials(a, x0)) {
      for (const F& y0 : roots) {
        const RootTransport<F> tr = transform_root_polynomial(a, rp, map, y0);
        ++r.stats["transports"];
        if (tr.m0 > 1) ++r.stats["m0_above_1"];
        if (tr.ell > 1) ++r.stats["ell_above_1"];
        if (!tr.consistent || !tr.outside_kernel) {
          r.fail(where + ": measured " + std::to_string(tr.measured) + " vs m0*truncated " +
                 std::to_string(tr.m0 * tr.truncated_order) + ", outside kernel " +
                 std::to_string(tr.outside_kernel) + ": " + repro(a, &map));
        } else if (!tr.matches_claim()) {
          ++r.findings;
          r.note(where + ": measured order " + std::to_string(tr.measured) + " != m0*ell = " +
                 std::to_string(tr.predicted) + " (truncated order " + std::to_string(tr.truncated_order) + ")");
        }
      }
    }
  });
}

}  // namespace ratsub
