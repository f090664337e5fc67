#include "ratsub/eigstructure.hpp"

#include <algorithm>
#include <numeric>

namespace ratsub {

template <class F>
int CompleteEigenstructure<F>::index_sum() const {
  int s = 0;
  for (const auto& g : finite) {
    for (int e : g.exponents) s += g.base.degree() * e;
  }
  for (int e : infinite) s += e;
  for (int e : right_indices) s += e;
  for (int e : left_indices) s += e;
  return s;
}

template <class F>
CompleteEigenstructure<F> complete_eigenstructure(const PolyMatrix<F>& p) {
  CompleteEigenstructure<F> out;
  const auto inv = invariant_polynomials(p);
  out.rank = std::count_if(inv.begin(), inv.end(), [](const Poly<F>& d) { return !d.is_zero(); });
  out.grade = p.grade();
  out.finite = elementary_divisors_finite(inv);
  out.infinite = elementary_divisors_infinite(p);
  out.right_indices = right_kernel_minimal_basis(p).indices;
  out.left_indices = left_kernel_minimal_basis(p).indices;
  if (out.index_sum() != out.grade * static_cast<int>(out.rank)) {
    throw InternalError("index sum " + std::to_string(out.index_sum()) + " != grade * rank " +
                        std::to_string(out.grade * out.rank));
  }
  return out;
}

template <class F>
Mat<F> ker_at_point(const PolyMatrix<F>& p, const F& x0) {
  const MinimalBasis<F> v = right_kernel_minimal_basis(p);
  Mat<F> t = eval_matrix(v.vectors, x0).transpose();
  const Index r = static_cast<Index>(rref(t).size());
  return t.topRows(r).transpose();
}

template <class F>
int root_poly_order(const PolyMatrix<F>& p, const PolyMatrix<F>& v, const F& x0) {
  return vector_multiplicity(multiply(p, v), Poly<F>(p.field(), {-x0, scalar<F>(p.field(), 1)}));
}

template <class F>
bool is_root_polynomial(const PolyMatrix<F>& p, const PolyMatrix<F>& v, const F& x0) {
  const int ord = root_poly_order(p, v, x0);
  if (ord == 0) return false;
  const Mat<F> k = ker_at_point(p, x0);
  Mat<F> aug(k.rows(), k.cols() + 1);
  aug << k, eval_matrix(v, x0);
  return rank(aug) > k.cols();
}

template <class F>
std::vector<RootPolynomial<F>> maximal_root_polynomials(const PolyMatrix<F>& p, const F& x0) {
  const SmithDecomposition<F> s = smith_form(p);
  const Poly<F> base(p.field(), {-x0, scalar<F>(p.field(), 1)});
  std::vector<RootPolynomial<F>> out;
  for (std::size_t i = 0; i < s.invariants.size(); ++i) {
    if (s.invariants[i].is_zero()) break;
    const int e = multiplicity(s.invariants[i], base).first;
    if (e == 0) continue;
    out.push_back({columns(s.B, {static_cast<Index>(i)}), x0, e});
  }
  return out;
}

namespace {

template <class F>
PolyMatrix<F> taylor_truncation(const PolyMatrix<F>& v, const F& x0, int ell,
                                std::vector<std::vector<F>>& blocks) {
  const FieldSpec& field = v.field();
  blocks.assign(static_cast<std::size_t>(ell), std::vector<F>(static_cast<std::size_t>(v.rows()), scalar<F>(field, 0)));
  for (Index r = 0; r < v.rows(); ++r) {
    const std::vector<F> t = taylor_coeffs(v(r, 0), x0);
    for (int i = 0; i < ell && i < static_cast<int>(t.size()); ++i) blocks[i][static_cast<std::size_t>(r)] = t[i];
  }
  const Poly<F> shift(field, {-x0, scalar<F>(field, 1)});
  PolyMatrix<F> out(field, v.rows(), 1);
  for (Index r = 0; r < v.rows(); ++r) {
    Poly<F> e(field);
    Poly<F> pw = Poly<F>::one(field);
    for (int i = 0; i < ell; ++i) {
      e += pw * blocks[i][static_cast<std::size_t>(r)];
      pw *= shift;
    }
    out.set(r, 0, e);
  }
  return out;
}

}  // namespace

template <class F>
RootTransport<F> transform_root_polynomial(const PolyMatrix<F>& p, const RootPolynomial<F>& rp,
                                           const RationalMap<F>& map, const F& y0) {
  const FieldSpec& field = p.field();
  const F& x0 = rp.x0;
  const Poly<F> lin = map.n() - map.d() * x0;  // n - x0 d
  const Poly<F> ybase(field, {-y0, scalar<F>(field, 1)});
  RootTransport<F> out;
  out.y0 = y0;
  out.m0 = multiplicity(lin, ybase).first;
  if (out.m0 == 0) throw InvalidArgument("y0 is not a preimage of x0");
  out.ell = rp.order;
  out.predicted = out.m0 * out.ell;

  std::vector<std::vector<F>> blocks;
  const PolyMatrix<F> trunc = taylor_truncation(rp.v, x0, rp.order, blocks);
  out.truncated_order = root_poly_order(p, trunc, x0);

  PolyMatrix<F> w(field, rp.v.rows(), 1);
  for (int i = 0; i < rp.order; ++i) {
    const Poly<F> f = pow(map.d(), rp.order - 1 - i) * pow(lin, i);
    for (Index r = 0; r < w.rows(); ++r) {
      const F& c = blocks[i][static_cast<std::size_t>(r)];
      if (!is_zero(c)) w.set(r, 0, w(r, 0) + f * c);
    }
  }
  out.w = w;
  const PolyMatrix<F> q = phi_matrix(p, map);
  out.measured = root_poly_order(q, w, y0);
  out.consistent = out.truncated_order >= 0 && out.measured == out.m0 * out.truncated_order;
  out.outside_kernel = is_root_polynomial(q, w, y0);
  return out;
}

template <class F>
std::vector<Poly<F>> coprime_base(const std::vector<Poly<F>>& polys) {
  std::vector<Poly<F>> base;
  for (const auto& a : polys) {
    if (a.degree() < 1) continue;
    for (const auto& f : squarefree_decompose(a).factors) base.push_back(f.base);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Poly<F> g = gcd(base[i], base[j]);
        if (g.degree() < 1) continue;
        std::vector<Poly<F>> parts{g, exact_div(base[i], g), exact_div(base[j], g)};
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& q : parts) {
          if (q.degree() >= 1) base.push_back(monic(q));
        }
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end(), [](const Poly<F>& a, const Poly<F>& b) { return compare(a, b) < 0; });
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

namespace {

template <class F>
std::vector<int> positionwise(const std::vector<Poly<F>>& inv, Index rank, const Poly<F>& base) {
  std::vector<int> v;
  for (Index i = 0; i < rank; ++i) v.push_back(multiplicity(inv[static_cast<std::size_t>(i)], base).first);
  return v;
}

template <class F>
struct YGroup {
  Poly<F> base;
  int multiplicity;
  bool grouped;
};

// Irreducible factors of a monic polynomial, or squarefree groups when the
// factor search is out of budget.
template <class F>
std::vector<YGroup<F>> y_groups(const Poly<F>& img, std::vector<std::string>& notes) {
  std::vector<YGroup<F>> out;
  try {
    for (const auto& f : factor_irreducible(img).factors) out.push_back({f.base, f.exponent, false});
  } catch (const BoundExceeded& e) {
    notes.push_back("y-side factorization of " + to_string(img, "y") + " replaced by squarefree groups: " +
                    e.what());
    for (const auto& f : squarefree_decompose(img).factors) out.push_back({f.base, f.exponent, true});
  }
  return out;
}

template <class F>
void finish_record(MappingRecord<F>& r, Index rank_q) {
  r.predicted.clear();
  for (int l : r.x_exponents) r.predicted.push_back(r.multiplicity * l);
  r.ok = r.predicted == r.observed;
  r.converse = r.observed.size() == r.x_exponents.size();
  for (std::size_t i = 0; i < r.observed.size() && r.converse; ++i) {
    r.converse = r.multiplicity > 0 && r.observed[i] % r.multiplicity == 0 &&
                 r.observed[i] / r.multiplicity == r.x_exponents[i];
  }
  (void)rank_q;
}

std::vector<int> scaled(const std::vector<int>& v, int g) {
  std::vector<int> out;
  for (int x : v) out.push_back(g * x);
  return out;
}

}  // namespace

template <class F>
TheoremReport<F> verify_theorem(const PolyMatrix<F>& p, const RationalMap<F>& map) {
  const FieldSpec& field = p.field();
  TheoremReport<F> rep;
  rep.G = map.G();
  rep.grade_p = p.grade();
  const PolyMatrix<F> q = phi_matrix(p, map);
  rep.grade_q = q.grade();

  rep.invariants_p = invariant_polynomials(p);
  rep.invariants_q = invariant_polynomials(q);
  auto nonzero = [](const std::vector<Poly<F>>& v) {
    return static_cast<Index>(std::count_if(v.begin(), v.end(), [](const Poly<F>& d) { return !d.is_zero(); }));
  };
  rep.rank_p = nonzero(rep.invariants_p);
  rep.rank_q = nonzero(rep.invariants_q);
  rep.infinite_p = infinite_valuations(p);
  rep.infinite_q = infinite_valuations(q);
  for (Index i = 0; i < rep.rank_p; ++i) {
    rep.internal_exponents.push_back(rep.grade_p - rep.invariants_p[static_cast<std::size_t>(i)].degree());
  }

  // x-side finite bases
  std::vector<Poly<F>> xbases;
  bool xgrouped = false;
  try {
    for (Index i = 0; i < rep.rank_p; ++i) {
      const auto& d = rep.invariants_p[static_cast<std::size_t>(i)];
      if (d.degree() < 1) continue;
      for (const auto& f : factor_irreducible(d).factors) {
        if (std::find(xbases.begin(), xbases.end(), f.base) == xbases.end()) xbases.push_back(f.base);
      }
    }
    std::sort(xbases.begin(), xbases.end(), [](const Poly<F>& a, const Poly<F>& b) { return compare(a, b) < 0; });
  } catch (const BoundExceeded& e) {
    rep.notes.push_back(std::string("x-side factorization replaced by a coprime base: ") + e.what());
    std::vector<Poly<F>> nz(rep.invariants_p.begin(), rep.invariants_p.begin() + rep.rank_p);
    xbases = coprime_base(nz);
    xgrouped = true;
  }

  for (const auto& xb : xbases) {
    const std::vector<int> ell = positionwise(rep.invariants_p, rep.rank_p, xb);
    const Poly<F> img = monic(phi_scalar(xb, xb.degree(), map));
    for (const auto& yg : y_groups(img, rep.notes)) {
      MappingRecord<F> r;
      r.x_base = CharPoint<F>(xb);
      r.x_grouped = xgrouped;
      r.x_exponents = ell;
      r.y_base = CharPoint<F>(yg.base);
      r.y_grouped = yg.grouped;
      r.multiplicity = yg.multiplicity;
      r.observed = positionwise(rep.invariants_q, rep.rank_q, yg.base);
      finish_record(r, rep.rank_q);
      rep.records.push_back(std::move(r));
    }
  }

  // y = infinity comes from the single point x(infinity)
  {
    MappingRecord<F> r;
    r.x_base = map.value_at_infinity();
    r.y_base = CharPoint<F>::infinity();
    if (r.x_base.is_infinity()) {
      r.x_exponents = rep.infinite_p;
      r.multiplicity = map.N() - map.D();
    } else {
      r.x_exponents = positionwise(rep.invariants_p, rep.rank_p, r.x_base.base());
      r.multiplicity = map.G() - (map.d() * r.x_base.root() - map.n()).degree();
    }
    r.observed = rep.infinite_q;
    finish_record(r, rep.rank_q);
    rep.records.push_back(std::move(r));
  }

  // x = infinity maps to the roots of d (the preimage of 0 under the dual map)
  if (map.D() > 0) {
    const RationalMap<F> psi = psi_dual(map);
    const GroupedPreimage<F> gp = grouped_preimage(psi, Poly<F>::variable(field), false);
    for (const auto& f : gp.factors.factors) {
      MappingRecord<F> r;
      r.x_base = CharPoint<F>::infinity();
      r.x_exponents = rep.infinite_p;
      r.y_base = CharPoint<F>(f.base);
      r.multiplicity = f.exponent;
      r.observed = positionwise(rep.invariants_q, rep.rank_q, f.base);
      finish_record(r, rep.rank_q);
      rep.records.push_back(std::move(r));
    }
  }

  // exhaustiveness: the finite y-bases are pairwise coprime and account for all of d_i^Q
  bool coprime = true;
  std::vector<Poly<F>> ybases;
  for (const auto& r : rep.records) {
    if (!r.y_base.is_infinity()) ybases.push_back(r.y_base.base());
  }
  for (std::size_t i = 0; i < ybases.size(); ++i) {
    for (std::size_t j = i + 1; j < ybases.size(); ++j) coprime = coprime && gcd(ybases[i], ybases[j]).degree() == 0;
  }
  bool covered = true;
  std::vector<std::string> leftovers;
  for (Index i = 0; i < rep.rank_q; ++i) {
    Poly<F> rest = rep.invariants_q[static_cast<std::size_t>(i)];
    for (const auto& b : ybases) rest = multiplicity(rest, b).second;
    if (rest.degree() > 0) {
      covered = false;
      leftovers.push_back(to_string(rest, "y"));
    }
  }
  for (const auto& l : leftovers) rep.notes.push_back("unexplained factor of an invariant of Q: " + l);
  rep.exhaustive = coprime && covered;

  rep.identity = rep.rank_p == rep.rank_q;
  for (Index i = 0; i < rep.rank_p && rep.identity; ++i) {
    const auto& dp = rep.invariants_p[static_cast<std::size_t>(i)];
    const Poly<F> expect =
        monic(phi_scalar(dp, dp.degree(), map) * pow(map.d(), rep.infinite_p[static_cast<std::size_t>(i)]));
    rep.identity = expect == rep.invariants_q[static_cast<std::size_t>(i)];
  }

  rep.converse = std::all_of(rep.records.begin(), rep.records.end(), [](const auto& r) { return r.converse; });

  rep.right.x_indices = right_kernel_minimal_basis(p).indices;
  rep.right.y_indices = right_kernel_minimal_basis(q).indices;
  rep.right.ok = rep.right.y_indices == scaled(rep.right.x_indices, rep.G);
  rep.left.x_indices = left_kernel_minimal_basis(p).indices;
  rep.left.y_indices = left_kernel_minimal_basis(q).indices;
  rep.left.ok = rep.left.y_indices == scaled(rep.left.x_indices, rep.G);

  const bool records_ok = std::all_of(rep.records.begin(), rep.records.end(), [](const auto& r) { return r.ok; });
  rep.verdict = rep.rank_p == rep.rank_q && records_ok && rep.exhaustive && rep.identity && rep.converse &&
                rep.right.ok && rep.left.ok;
  return rep;
}

namespace {

template <class F>
std::vector<std::pair<int, std::vector<int>>> exponent_signature(const CompleteEigenstructure<F>& e) {
  std::vector<std::pair<int, std::vector<int>>> sig;
  for (const auto& g : e.finite) sig.emplace_back(g.base.degree(), g.exponents);
  if (!e.infinite.empty()) sig.emplace_back(1, e.infinite);
  std::sort(sig.begin(), sig.end());
  return sig;
}

template <class F>
bool same_structure(const CompleteEigenstructure<F>& a, const CompleteEigenstructure<F>& b) {
  if (a.finite.size() != b.finite.size()) return false;
  for (std::size_t i = 0; i < a.finite.size(); ++i) {
    if (!(a.finite[i].base == b.finite[i].base) || a.finite[i].exponents != b.finite[i].exponents) return false;
  }
  return a.infinite == b.infinite && a.right_indices == b.right_indices && a.left_indices == b.left_indices &&
         a.rank == b.rank && a.grade == b.grade;
}

}  // namespace

template <class F>
MobiusReport<F> verify_mobius_roundtrip(const PolyMatrix<F>& p, const RationalMap<F>& map) {
  if (map.G() != 1) throw InvalidArgument("verify_mobius_roundtrip needs a map of degree 1");
  MobiusReport<F> rep;
  const PolyMatrix<F> q = phi_matrix(p, map);
  const CompleteEigenstructure<F> ep = complete_eigenstructure(p);
  const CompleteEigenstructure<F> eq = complete_eigenstructure(q);
  rep.exponents_invariant = exponent_signature(ep) == exponent_signature(eq) && ep.rank == eq.rank;
  rep.indices_invariant = ep.right_indices == eq.right_indices && ep.left_indices == eq.left_indices;

  const PolyMatrix<F> back = phi_matrix(q, mobius_inverse(map));
  // back = c^g P with c = bc - ae for n = a y + b, d = c y + e
  const F a = map.n().coeff(1), b = map.n().coeff(0), c = map.d().coeff(1), e = map.d().coeff(0);
  F scale = scalar<F>(p.field(), 1);
  for (int i = 0; i < p.grade(); ++i) scale *= b * c - a * e;
  PolyMatrix<F> expect = p;
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) expect.set(i, j, p(i, j) * scale);
  }
  rep.scalar_multiple = back == expect;
  rep.roundtrip_exact = same_structure(complete_eigenstructure(back), ep);
  return rep;
}

#define RATSUB_INSTANTIATE(F)                                                                               \
  template struct CompleteEigenstructure<F>;                                                                \
  template CompleteEigenstructure<F> complete_eigenstructure(const PolyMatrix<F>&);                         \
  template Mat<F> ker_at_point(const PolyMatrix<F>&, const F&);                                             \
  template int root_poly_order(const PolyMatrix<F>&, const PolyMatrix<F>&, const F&);                       \
  template bool is_root_polynomial(const PolyMatrix<F>&, const PolyMatrix<F>&, const F&);                   \
  template std::vector<RootPolynomial<F>> maximal_root_polynomials(const PolyMatrix<F>&, const F&);         \
  template RootTransport<F> transform_root_polynomial(const PolyMatrix<F>&, const RootPolynomial<F>&,       \
                                                      const RationalMap<F>&, const F&);                     \
  template std::vector<Poly<F>> coprime_base(const std::vector<Poly<F>>&);                                  \
  template TheoremReport<F> verify_theorem(const PolyMatrix<F>&, const RationalMap<F>&);                    \
  template MobiusReport<F> verify_mobius_roundtrip(const PolyMatrix<F>&, const RationalMap<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
