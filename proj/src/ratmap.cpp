#include "ratsub/ratmap.hpp"

#include <algorithm>

namespace ratsub {

template <class F>
CharPoint<F> CharPoint<F>::value(const FieldSpec& field, const F& x0) {
  return CharPoint(Poly<F>(field, std::vector<F>{-x0, scalar<F>(field, 1)}));
}

template <class F>
const Poly<F>& CharPoint<F>::base() const {
  if (!base_) throw InvalidArgument("the point at infinity has no base polynomial");
  return *base_;
}

template <class F>
F CharPoint<F>::root() const {
  if (!is_linear()) throw InvalidArgument("characteristic value is not a field element");
  return -base_->coeffs()[0] * inverse(base_->coeffs()[1]);
}

template <class F>
bool charpoint_less(const CharPoint<F>& a, const CharPoint<F>& b) {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
  return compare(a.base(), b.base()) < 0;
}

template <class F>
std::string to_string(const CharPoint<F>& p, const std::string& var) {
  if (p.is_infinity()) return "inf";
  return to_string(p.base(), var);
}

template <class F>
RationalMap<F>::RationalMap(Poly<F> n, Poly<F> d) : n_(std::move(n)), d_(std::move(d)) {
  if (n_.is_zero() || d_.is_zero()) throw InvalidArgument("rational map needs nonzero n and d");
  FieldSpec::join(n_.field(), d_.field());
  if (G() < 1) throw InvalidArgument("rational map of degree 0 (both n and d constant)");
  if (gcd(n_, d_).degree() > 0) throw InvalidArgument("rational map with non-coprime n and d");
}

template <class F>
CharPoint<F> RationalMap<F>::value_at_infinity() const {
  if (N() > D()) return CharPoint<F>::infinity();
  if (N() < D()) return CharPoint<F>::value(field(), scalar<F>(field(), 0));
  return CharPoint<F>::value(field(), n_G() * inverse(d_G()));
}

namespace {

template <class F>
struct PowerTable {
  std::vector<Poly<F>> n, d;
  PowerTable(const RationalMap<F>& map, int g) {
    n.push_back(Poly<F>::one(map.field()));
    d.push_back(Poly<F>::one(map.field()));
    for (int i = 1; i <= g; ++i) {
      n.push_back(n.back() * map.n());
      d.push_back(d.back() * map.d());
    }
  }
};

template <class F>
Poly<F> phi_with(const Poly<F>& p, int g, const PowerTable<F>& t, const FieldSpec& field) {
  Poly<F> r(field);
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p.coeffs()[i])) continue;
    r += (t.n[i] * t.d[g - i]) * p.coeffs()[i];
  }
  return r;
}

}  // namespace

template <class F>
Poly<F> phi_scalar(const Poly<F>& p, int grade, const RationalMap<F>& map) {
  if (grade < p.degree() || grade < 0) {
    throw InvalidArgument("phi: grade " + std::to_string(grade) + " below degree " + std::to_string(p.degree()));
  }
  PowerTable<F> t(map, grade);
  return phi_with(p, grade, t, map.field());
}

template <class F>
PolyMatrix<F> phi_matrix(const PolyMatrix<F>& p, const RationalMap<F>& map) {
  const int g = p.grade();
  PowerTable<F> t(map, g);
  const FieldSpec field = FieldSpec::join(p.field(), map.field());
  Mat<Poly<F>> q(p.rows(), p.cols());
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) q(i, j) = phi_with(p(i, j), g, t, field);
  }
  return PolyMatrix<F>(field, std::move(q), g * map.G());
}

template <class F>
DegreeBoundReport<F> degree_bound(const PolyMatrix<F>& p, const RationalMap<F>& map) {
  if (p.is_zero()) throw InvalidArgument("degree bound of the zero matrix");
  const int g = p.grade(), N = map.N(), D = map.D(), G = map.G();
  int best = 0;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    bool nonzero = false;
    for (Index r = 0; r < p.rows() && !nonzero; ++r) {
      for (Index c = 0; c < p.cols() && !nonzero; ++c) nonzero = !is_zero(p(r, c).coeff(i));
    }
    if (!nonzero) continue;
    int v = i * (N - D);
    if (first || v > best) best = v;
    first = false;
  }
  DegreeBoundReport<F> rep;
  rep.q = g * D + best;
  if (N > D) {
    rep.reason = g > p.degree() ? DegreeDrop::NgtDGradeSlack : DegreeDrop::Exact;
    return rep;
  }
  const F xhat = map.value_at_infinity().root();
  rep.xhat = xhat;
  // (x - xhat) | P iff P(xhat) = 0
  const Mat<F> at = eval_matrix(p, xhat);
  bool vanishes = true;
  for (Index r = 0; r < at.rows() && vanishes; ++r) {
    for (Index c = 0; c < at.cols() && vanishes; ++c) vanishes = is_zero(at(r, c));
  }
  rep.reason = vanishes ? DegreeDrop::FactorAtXhat : DegreeDrop::Exact;
  // for N < D the formula already accounts for the valuation at 0
  rep.attained = N < D || !vanishes;
  (void)G;
  return rep;
}

template <class F>
PreimageSet<F> preimage_set(const RationalMap<F>& map, const CharPoint<F>& x0) {
  if (!x0.is_infinity() && !x0.is_linear()) {
    throw InvalidArgument("preimage_set expects a field element or infinity");
  }
  Poly<F> eq = x0.is_infinity() ? map.d() : map.d() * x0.root() - map.n();
  PreimageSet<F> out;
  out.target = x0;
  out.S = eq.degree();
  for (auto& f : factor_irreducible(eq).factors) out.entries.push_back({CharPoint<F>(f.base), f.exponent});
  if (out.S < map.G()) {
    out.includes_infinity = true;
    out.entries.push_back({CharPoint<F>::infinity(), map.G() - out.S});
  }
  return out;
}

template <class F>
GroupedPreimage<F> grouped_preimage(const RationalMap<F>& map, const Poly<F>& q, bool check) {
  if (check && (!q.is_monic() || !is_irreducible(q))) {
    throw InvalidArgument("grouped_preimage expects a monic irreducible base, got " + to_string(q));
  }
  Poly<F> img = monic(phi_scalar(q, q.degree(), map));
  GroupedPreimage<F> out;
  out.factors = factor_irreducible(img);
  // only a linear base can carry the (x - xhat) factor that lowers the degree
  out.infinity_multiplicity = q.degree() * map.G() - img.degree();
  return out;
}

template <class F>
RationalMap<F> mobius_inverse(const RationalMap<F>& map) {
  if (map.G() != 1) throw InvalidArgument("mobius_inverse needs a map of degree 1");
  const F a = map.n().coeff(1), b = map.n().coeff(0), c = map.d().coeff(1), e = map.d().coeff(0);
  if (is_zero(a * e - b * c)) throw InvalidArgument("degenerate Mobius map");
  const FieldSpec& f = map.field();
  return RationalMap<F>(Poly<F>(f, {b, -e}), Poly<F>(f, {-a, c}));
}

template <class F>
RationalMap<F> psi_dual(const RationalMap<F>& map) {
  return RationalMap<F>(map.d(), map.n());
}

#define RATSUB_INSTANTIATE(F)                                                                    \
  template class CharPoint<F>;                                                                   \
  template bool charpoint_less(const CharPoint<F>&, const CharPoint<F>&);                        \
  template std::string to_string(const CharPoint<F>&, const std::string&);                       \
  template class RationalMap<F>;                                                                 \
  template Poly<F> phi_scalar(const Poly<F>&, int, const RationalMap<F>&);                       \
  template PolyMatrix<F> phi_matrix(const PolyMatrix<F>&, const RationalMap<F>&);                \
  template DegreeBoundReport<F> degree_bound(const PolyMatrix<F>&, const RationalMap<F>&);       \
  template PreimageSet<F> preimage_set(const RationalMap<F>&, const CharPoint<F>&);              \
  template GroupedPreimage<F> grouped_preimage(const RationalMap<F>&, const Poly<F>&, bool);     \
  template RationalMap<F> mobius_inverse(const RationalMap<F>&);                                 \
  template RationalMap<F> psi_dual(const RationalMap<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
