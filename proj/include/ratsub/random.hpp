#pragma once

// Seeded instance generators. Everything is driven by mt19937_64 with our own
// range reduction, so a seed gives the same instances on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "ratsub/ratmap.hpp"

namespace ratsub {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do v = eng_();
    while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

template <class F>
F random_scalar(Rng& rng, const FieldSpec& field, long lo = -5, long hi = 5) {
  return scalar<F>(field, rng.range(lo, hi));
}

template <class F>
F random_nonzero(Rng& rng, const FieldSpec& field, long lo = -5, long hi = 5) {
  for (;;) {
    F c = random_scalar<F>(rng, field, lo, hi);
    if (!is_zero(c)) return c;
  }
}

/// Exact degree deg (deg < 0 gives zero).
template <class F>
Poly<F> random_poly(Rng& rng, const FieldSpec& field, int deg, long lo = -5, long hi = 5) {
  if (deg < 0) return Poly<F>(field);
  std::vector<F> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_scalar<F>(rng, field, lo, hi));
  c.push_back(random_nonzero<F>(rng, field, lo, hi));
  return Poly<F>(field, std::move(c));
}

/// Entries are zero with probability zero_num/zero_den, otherwise of degree
/// uniform in [0, max_deg].
template <class F>
PolyMatrix<F> random_matrix(Rng& rng, const FieldSpec& field, Index m, Index p, int max_deg, int zero_num = 1,
                            int zero_den = 4) {
  PolyMatrix<F> a(field, m, p);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < p; ++j) {
      if (rng.chance(zero_num, zero_den)) continue;
      a.set(i, j, random_poly<F>(rng, field, static_cast<int>(rng.range(0, max_deg))));
    }
  }
  return a;
}

/// Product of random elementary operations; row additions carry a polynomial
/// multiplier of degree <= op_deg.
template <class F>
PolyMatrix<F> random_unimodular(Rng& rng, const FieldSpec& field, Index n, int steps, int op_deg) {
  Mat<Poly<F>> e = PolyMatrix<F>::identity(field, n).entries();
  for (int s = 0; s < steps && n > 1; ++s) {
    const Index i = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    Index j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    switch (rng.below(3)) {
      case 0:
        e.row(i).swap(e.row(j));
        break;
      case 1: {
        const F c = random_nonzero<F>(rng, field, -3, 3);
        for (Index k = 0; k < n; ++k) e(i, k) *= c;
        break;
      }
      default: {
        const Poly<F> q = random_poly<F>(rng, field, static_cast<int>(rng.range(0, op_deg)), -3, 3);
        for (Index k = 0; k < n; ++k) {
          if (!e(j, k).is_zero()) e(i, k) += q * e(j, k);
        }
      }
    }
  }
  return PolyMatrix<F>(field, std::move(e));
}

/// Square matrix with nonzero determinant whose value at x0 is also nonzero.
template <class F>
PolyMatrix<F> random_regular_at(Rng& rng, const FieldSpec& field, Index n, int max_deg, const F& x0) {
  for (;;) {
    PolyMatrix<F> a = random_matrix<F>(rng, field, n, n, max_deg, 1, 3);
    const Poly<F> det = determinant(a);
    if (!det.is_zero() && !is_zero(evaluate(det, x0))) return a;
  }
}

enum class MapKind { Any, Mobius, NumeratorHigher, DenominatorHigher, Polynomial };

/// Coprime n, d with max(deg n, deg d) = G exactly.
template <class F>
RationalMap<F> random_map(Rng& rng, const FieldSpec& field, int g, MapKind kind = MapKind::Any) {
  if (kind == MapKind::Mobius) g = 1;
  for (;;) {
    int dn = g, dd = g;
    switch (kind) {
      case MapKind::Polynomial:
        dd = 0;
        break;
      case MapKind::NumeratorHigher:
        dd = static_cast<int>(rng.range(0, g - 1));
        break;
      case MapKind::DenominatorHigher:
        dn = static_cast<int>(rng.range(0, g - 1));
        break;
      case MapKind::Any:
      case MapKind::Mobius:
        if (rng.chance(1, 2)) {
          if (rng.chance(1, 2))
            dd = static_cast<int>(rng.range(0, g));
          else
            dn = static_cast<int>(rng.range(0, g));
        }
        break;
    }
    Poly<F> n = random_poly<F>(rng, field, dn);
    Poly<F> d = random_poly<F>(rng, field, dd);
    if (gcd(n, d).degree() != 0) continue;
    if (std::max(n.degree(), d.degree()) != g) continue;
    return RationalMap<F>(std::move(n), std::move(d));
  }
}

/// diag(...) of planted factors sandwiched between random unimodular matrices.
/// Planted roots are small integers, plus x(infinity) of the map when it is
/// finite, so the instance exercises the infinite structure of Q. Some
/// instances use rank < min(m, p) and a grade above the degree.
template <class F>
PolyMatrix<F> planted_instance(Rng& rng, const FieldSpec& field, Index m, Index p, int max_grade,
                               const RationalMap<F>* map = nullptr) {
  std::vector<F> roots = {scalar<F>(field, 0), scalar<F>(field, 1), scalar<F>(field, -2), scalar<F>(field, 3)};
  if (map != nullptr && !map->value_at_infinity().is_infinity()) {
    const F xhat = map->value_at_infinity().root();
    roots.push_back(xhat);
    roots.push_back(xhat);
  }
  for (;;) {
    const Index nu = std::min(m, p);
    const Index r = rng.chance(1, 3) ? static_cast<Index>(rng.range(0, static_cast<long>(nu))) : nu;
    PolyMatrix<F> d(field, m, p);
    Poly<F> prev = Poly<F>::one(field);
    for (Index i = 0; i < r; ++i) {
      // keep a divisibility chain half the time; otherwise an arbitrary diagonal
      Poly<F> e = rng.chance(1, 2) ? prev : Poly<F>::one(field);
      const int extra = static_cast<int>(rng.range(0, 2));
      for (int t = 0; t < extra; ++t) {
        if (rng.chance(1, 6)) {
          e *= Poly<F>(field, {scalar<F>(field, 1), scalar<F>(field, 0), scalar<F>(field, 1)});
        } else {
          e *= Poly<F>(field, {-rng.pick(roots), scalar<F>(field, 1)});
        }
      }
      if (e.degree() > max_grade) e = Poly<F>::one(field);
      d.set(i, i, e * random_nonzero<F>(rng, field, -3, 3));
      prev = e;
    }
    const int op_deg = rng.chance(1, 2) ? 1 : 0;
    PolyMatrix<F> out = multiply(multiply(random_unimodular<F>(rng, field, m, 4, op_deg), d),
                                 random_unimodular<F>(rng, field, p, 4, op_deg));
    const int k = out.degree();
    if (k > max_grade) continue;
    out.set_grade(static_cast<int>(rng.range(std::max(k, 1), max_grade)));
    return out;
  }
}

}  // namespace ratsub
