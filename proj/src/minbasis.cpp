#include "ratsub/minbasis.hpp"

#include <algorithm>
#include <numeric>

namespace ratsub {

template <class F>
int MinimalBasis<F>::order() const {
  return std::accumulate(indices.begin(), indices.end(), 0);
}

template <class F>
int default_degree_cap(const PolyMatrix<F>& p) {
  return p.degree() * static_cast<int>(std::min(p.rows(), p.cols())) + 1;
}

namespace {

// Column (j, c) of the convolution matrix C_delta: block t holds P_{t-j}(:, c).
template <class F>
std::vector<F> conv_column(const std::vector<Mat<F>>& coeffs, Index m, int j, Index c, Index length,
                           const FieldSpec& field) {
  std::vector<F> x(static_cast<std::size_t>(length), scalar<F>(field, 0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (Index r = 0; r < m; ++r) x[static_cast<std::size_t>((j + static_cast<Index>(i)) * m + r)] = coeffs[i](r, c);
  }
  return x;
}

template <class F>
struct EchelonRow {
  std::vector<F> v;
  std::size_t pivot;
  std::vector<F> comb;
};

// a < b: earlier first nonzero wins, then entrywise comparison
template <class F>
bool coeff_less(const std::vector<F>& a, const std::vector<F>& b) {
  auto first = [](const std::vector<F>& x) {
    std::size_t i = 0;
    while (i < x.size() && is_zero(x[i])) ++i;
    return i;
  };
  const std::size_t fa = first(a), fb = first(b);
  if (fa != fb) return fa < fb;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

template <class F>
std::vector<Mat<F>> coefficient_list(const PolyMatrix<F>& p) {
  std::vector<Mat<F>> out;
  if (p.is_zero()) return out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(coefficient(p, i));
  return out;
}

}  // namespace

template <class F>
MinimalBasis<F> right_kernel_minimal_basis(const PolyMatrix<F>& p, int degree_cap) {
  const FieldSpec& field = p.field();
  const Index m = p.rows(), n = p.cols();
  const Index s = n - rank_fraction_field(p);
  const int cap = degree_cap < 0 ? default_degree_cap(p) : degree_cap;
  const std::vector<Mat<F>> coeffs = coefficient_list(p);
  const int k = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;

  std::vector<std::vector<F>> chosen;  // flattened coefficient blocks
  std::vector<int> degrees;
  EchelonBasis<F> leads(field, n);
  std::vector<EchelonRow<F>> rows;  // sorted by pivot

  for (int delta = 0; static_cast<Index>(chosen.size()) < s; ++delta) {
    if (delta > cap) throw InternalError("minimal basis: degree cap " + std::to_string(cap) + " exceeded");
    const Index length = m * (k + delta + 1);
    const std::size_t unknowns = static_cast<std::size_t>(n * (delta + 1));
    std::vector<std::vector<F>> candidates;
    for (Index c = 0; c < n; ++c) {
      std::vector<F> x = conv_column(coeffs, m, delta, c, length, field);
      std::vector<F> comb(unknowns, scalar<F>(field, 0));
      comb[static_cast<std::size_t>(delta * n + c)] = scalar<F>(field, 1);
      for (const auto& row : rows) {
        if (is_zero(x[row.pivot])) continue;
        const F f = x[row.pivot];
        for (std::size_t t = row.pivot; t < row.v.size(); ++t) x[t] -= f * row.v[t];
        for (std::size_t t = 0; t < row.comb.size(); ++t) comb[t] -= f * row.comb[t];
      }
      std::size_t piv = 0;
      while (piv < x.size() && is_zero(x[piv])) ++piv;
      if (piv == x.size()) {
        candidates.push_back(std::move(comb));
        continue;
      }
      const F inv = inverse(x[piv]);
      for (auto& a : x) a *= inv;
      for (auto& a : comb) a *= inv;
      auto pos = std::find_if(rows.begin(), rows.end(), [&](const EchelonRow<F>& r) { return r.pivot > piv; });
      rows.insert(pos, EchelonRow<F>{std::move(x), piv, std::move(comb)});
    }

    for (auto& cand : candidates) {
      std::size_t i = 0;
      while (is_zero(cand[i])) ++i;
      const F inv = inverse(cand[i]);
      for (auto& a : cand) a *= inv;
    }
    std::sort(candidates.begin(), candidates.end(), coeff_less<F>);
    for (auto& cand : candidates) {
      if (static_cast<Index>(chosen.size()) == s) break;
      Vec<F> lead(n);
      for (Index c = 0; c < n; ++c) lead(c) = cand[static_cast<std::size_t>(delta * n + c)];
      if (leads.insert(lead)) {
        chosen.push_back(std::move(cand));
        degrees.push_back(delta);
      }
    }
  }

  Mat<Poly<F>> v(n, static_cast<Index>(chosen.size()));
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    for (Index c = 0; c < n; ++c) {
      std::vector<F> e;
      for (int t = 0; t <= degrees[j]; ++t) e.push_back(chosen[j][static_cast<std::size_t>(t * n + c)]);
      v(c, static_cast<Index>(j)) = Poly<F>(field, std::move(e));
    }
  }
  MinimalBasis<F> out{PolyMatrix<F>(field, std::move(v)), degrees};
  const ForneyResult<F> fc = forney_check(p, out.vectors);
  if (!fc.ok) throw InternalError("minimal basis failed Forney's criterion");
  return out;
}

template <class F>
MinimalBasis<F> left_kernel_minimal_basis(const PolyMatrix<F>& p, int degree_cap) {
  return right_kernel_minimal_basis(transpose(p), degree_cap);
}

template <class F>
ForneyResult<F> forney_check(const PolyMatrix<F>& p, const PolyMatrix<F>& v) {
  if (p.cols() != v.rows()) throw InvalidArgument("forney_check: dimension mismatch");
  ForneyResult<F> out;
  out.minor_gcd = Poly<F>::one(p.field());
  const Index s = v.cols();
  if (s == 0) return out;
  if (!multiply(p, v).is_zero()) throw InvalidArgument("forney_check: columns are not in the kernel");
  for (Index j = 0; j < s; ++j) {
    int d = 0;
    for (Index i = 0; i < v.rows(); ++i) d = std::max(d, v(i, j).degree());
    out.order += d;
  }
  Poly<F> g(p.field());
  int maxdeg = -1;
  for (const auto& mnr : minors(v, static_cast<int>(s))) {
    g = gcd(g, mnr);
    maxdeg = std::max(maxdeg, mnr.degree());
  }
  out.minor_gcd = g;
  out.max_minor_degree = maxdeg;
  out.ok = g.degree() == 0 && maxdeg == out.order;
  return out;
}

template <class F>
std::vector<int> minimal_indices_oracle(const PolyMatrix<F>& p, int degree_cap) {
  const FieldSpec& field = p.field();
  const Index m = p.rows(), n = p.cols();
  const Index s = n - rank_fraction_field(p);
  const std::vector<Mat<F>> coeffs = coefficient_list(p);
  const int k = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
  std::vector<int> out;
  Index prev_dim = 0, prev_count = 0;
  for (int delta = 0; static_cast<Index>(out.size()) < s; ++delta) {
    if (delta > degree_cap) {
      throw InvalidArgument("minimal_indices_oracle: cap " + std::to_string(degree_cap) + " too small");
    }
    Mat<F> c = zeros<F>(field, m * (k + delta + 1), n * (delta + 1));
    for (int j = 0; j <= delta; ++j) {
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        c.block((j + static_cast<Index>(i)) * m, j * n, m, n) = coeffs[i];
      }
    }
    const Index dim = n * (delta + 1) - rank(c);
    const Index count = dim - prev_dim;  // indices <= delta
    for (Index t = prev_count; t < count; ++t) out.push_back(delta);
    prev_dim = dim;
    prev_count = count;
  }
  return out;
}

template <class F>
MinimalBasis<F> transform_minimal_basis(const PolyMatrix<F>& p, const MinimalBasis<F>& v,
                                        const RationalMap<F>& map) {
  const FieldSpec& field = p.field();
  Mat<Poly<F>> w(v.vectors.rows(), v.size());
  std::vector<int> idx;
  for (Index j = 0; j < v.size(); ++j) {
    const int beta = v.indices[static_cast<std::size_t>(j)];
    int deg = -1;
    for (Index i = 0; i < v.vectors.rows(); ++i) {
      w(i, j) = phi_scalar(v.vectors(i, j), beta, map);
      deg = std::max(deg, w(i, j).degree());
    }
    if (deg != map.G() * beta) throw InternalError("transformed basis vector has degree != G * index");
    idx.push_back(map.G() * beta);
  }
  MinimalBasis<F> out{PolyMatrix<F>(field, std::move(w)), idx};
  if (!forney_check(phi_matrix(p, map), out.vectors).ok) {
    throw InternalError("transformed minimal basis failed Forney's criterion");
  }
  return out;
}

#define RATSUB_INSTANTIATE(F)                                                                    \
  template struct MinimalBasis<F>;                                                               \
  template int default_degree_cap(const PolyMatrix<F>&);                                         \
  template MinimalBasis<F> right_kernel_minimal_basis(const PolyMatrix<F>&, int);                \
  template MinimalBasis<F> left_kernel_minimal_basis(const PolyMatrix<F>&, int);                 \
  template ForneyResult<F> forney_check(const PolyMatrix<F>&, const PolyMatrix<F>&);             \
  template std::vector<int> minimal_indices_oracle(const PolyMatrix<F>&, int);                   \
  template MinimalBasis<F> transform_minimal_basis(const PolyMatrix<F>&, const MinimalBasis<F>&, \
                                                   const RationalMap<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
