#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ratsub/eigstructure.hpp"
#include "ratsub/parse.hpp"

namespace th {

using namespace ratsub;
using Q = Rational;
using PQ = Poly<Rational>;
using PM = PolyMatrix<Rational>;

inline const FieldSpec kQ = FieldSpec::rationals();

template <class F = Rational>
Poly<F> P(const std::string& s, const FieldSpec& f = kQ, const std::string& var = "x") {
  return parse_poly<F>(s, f, var);
}

template <class F = Rational>
PolyMatrix<F> M(const std::vector<std::vector<std::string>>& rows, int grade = -1, const FieldSpec& f = kQ,
                const std::string& var = "x") {
  Mat<Poly<F>> e(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) e(i, j) = P<F>(rows[i][j], f, var);
  }
  return grade < 0 ? PolyMatrix<F>(f, e) : PolyMatrix<F>(f, e, grade);
}

inline PM intro_p() {
  return M({{"x^2-20*x", "0", "0"}, {"x-20", "x^2-20*x", "0"}, {"0", "0", "x"}, {"0", "0", "x^2"}, {"0", "0", "0"}}, 2);
}

inline RationalMap<Rational> intro_map() { return RationalMap<Rational>(P("16*y^2-25", kQ, "y"), P("y^2-y", kQ, "y")); }

template <class F = Rational>
PolyMatrix<F> chain_p(const FieldSpec& f = kQ) {
  return M<F>({{"x", "1", "0", "0"}, {"0", "x", "1", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "x"}}, 1, f);
}

// Laplace expansion; independent of the library's elimination.
template <class F>
Poly<F> laplace_det(const std::vector<std::vector<Poly<F>>>& a, const FieldSpec& f) {
  const std::size_t n = a.size();
  if (n == 0) return Poly<F>::one(f);
  if (n == 1) return a[0][0];
  Poly<F> det(f);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Poly<F>>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<F>> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      sub.push_back(row);
    }
    const Poly<F> t = a[0][c] * laplace_det(sub, f);
    det = c % 2 == 0 ? det + t : det - t;
  }
  return det;
}

// gcd of all k x k minors by brute-force enumeration.
template <class F>
Poly<F> minor_gcd(const PolyMatrix<F>& a, int k) {
  const int m = static_cast<int>(a.rows()), p = static_cast<int>(a.cols());
  Poly<F> g(a.field());
  std::vector<bool> rsel(m), csel(p);
  std::fill(rsel.begin(), rsel.begin() + k, true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      std::vector<std::vector<Poly<F>>> sub;
      for (int i = 0; i < m; ++i) {
        if (!rsel[i]) continue;
        std::vector<Poly<F>> row;
        for (int j = 0; j < p; ++j) {
          if (csel[j]) row.push_back(a(i, j));
        }
        sub.push_back(row);
      }
      g = gcd(g, laplace_det(sub, a.field()));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

// Factorization over a small prime field by trial division against every
// monic polynomial in increasing (degree, coefficient) order.
inline std::vector<std::pair<Poly<ModP>, int>> trial_factor(Poly<ModP> f, std::uint32_t p) {
  const FieldSpec fs = FieldSpec::prime(p);
  std::vector<std::pair<Poly<ModP>, int>> out;
  f = monic(f);
  for (int d = 1; f.degree() >= 1; ++d) {
    if (2 * d > f.degree()) {
      out.emplace_back(f, 1);  // what is left is irreducible
      break;
    }
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<ModP> co;
      for (auto v : c) co.emplace_back(static_cast<std::int64_t>(v), p);
      co.emplace_back(1, p);
      const Poly<ModP> t(fs, co);
      int e = 0;
      while (f.degree() >= t.degree() && divmod(f, t).remainder.is_zero()) {
        f = divmod(f, t).quotient;
        ++e;
      }
      if (e > 0) out.emplace_back(t, e);
      std::size_t k = 0;
      while (k < c.size() && ++c[k] == p) c[k++] = 0;
      if (k == c.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return out;
}

}  // namespace th
