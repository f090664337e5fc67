#include "ratsub/polymat.hpp"

#include <algorithm>

namespace ratsub {

template <class F>
PolyMatrix<F>::PolyMatrix(const FieldSpec& field, Index rows, Index cols, int grade)
    : field_(field), e_(rows, cols), grade_(grade) {
  if (grade < 0) throw InvalidArgument("negative grade");
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) e_(i, j) = Poly<F>(field);
  }
}

template <class F>
PolyMatrix<F>::PolyMatrix(const FieldSpec& field, Mat<Poly<F>> entries, int grade)
    : field_(field), e_(std::move(entries)), grade_(grade) {
  if (grade < degree()) {
    throw InvalidArgument("grade " + std::to_string(grade) + " below matrix degree " +
                          std::to_string(degree()));
  }
}

template <class F>
PolyMatrix<F>::PolyMatrix(const FieldSpec& field, Mat<Poly<F>> entries)
    : field_(field), e_(std::move(entries)) {
  grade_ = degree();
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::identity(const FieldSpec& field, Index n, int grade) {
  PolyMatrix r(field, n, n, grade);
  for (Index i = 0; i < n; ++i) r.e_(i, i) = Poly<F>::one(field);
  return r;
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::constant(const FieldSpec& field, const Mat<F>& c, int grade) {
  PolyMatrix r(field, c.rows(), c.cols(), grade);
  for (Index i = 0; i < c.rows(); ++i) {
    for (Index j = 0; j < c.cols(); ++j) r.e_(i, j) = Poly<F>::constant(field, c(i, j));
  }
  return r;
}

template <class F>
void PolyMatrix<F>::set_grade(int g) {
  if (g < degree()) {
    throw InvalidArgument("grade " + std::to_string(g) + " below matrix degree " + std::to_string(degree()));
  }
  grade_ = g;
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::with_grade(int g) const {
  PolyMatrix r = *this;
  r.set_grade(g);
  return r;
}

template <class F>
int PolyMatrix<F>::degree() const {
  int d = 0;
  for (Index i = 0; i < rows(); ++i) {
    for (Index j = 0; j < cols(); ++j) d = std::max(d, e_(i, j).degree());
  }
  return d;
}

template <class F>
bool PolyMatrix<F>::is_zero() const {
  for (Index i = 0; i < rows(); ++i) {
    for (Index j = 0; j < cols(); ++j) {
      if (!e_(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class F>
void PolyMatrix<F>::set(Index i, Index j, Poly<F> v) {
  grade_ = std::max(grade_, v.degree());
  e_(i, j) = std::move(v);
}

template <class F>
PolyMatrix<F> multiply(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: inner dimensions differ");
  const FieldSpec field = FieldSpec::join(a.field(), b.field());
  Mat<Poly<F>> c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      Poly<F> s(field);
      for (Index k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(s);
    }
  }
  return PolyMatrix<F>(field, std::move(c), a.grade() + b.grade());
}

template <class F>
PolyMatrix<F> transpose(const PolyMatrix<F>& a) {
  Mat<Poly<F>> t = a.entries().transpose();
  return PolyMatrix<F>(a.field(), std::move(t), a.grade());
}

template <class F>
PolyMatrix<F> reversal_matrix(const PolyMatrix<F>& a) {
  Mat<Poly<F>> r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = reversal(a(i, j), a.grade());
  }
  return PolyMatrix<F>(a.field(), std::move(r), a.grade());
}

template <class F>
Mat<F> eval_matrix(const PolyMatrix<F>& a, const F& c) {
  FieldSpec::join(a.field(), field_of(c));
  Mat<F> r = zeros<F>(a.field(), a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = evaluate(a(i, j), c);
  }
  return r;
}

template <class F>
Mat<F> coefficient(const PolyMatrix<F>& a, int k) {
  Mat<F> r = zeros<F>(a.field(), a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).coeff(k);
  }
  return r;
}

template <class F>
PolyMatrix<F> columns(const PolyMatrix<F>& a, const std::vector<Index>& idx) {
  Mat<Poly<F>> r(a.rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) r.col(static_cast<Index>(k)) = a.entries().col(idx[k]);
  return PolyMatrix<F>(a.field(), std::move(r), a.grade());
}

namespace {

// In-place fraction-free elimination with complete pivoting; returns the rank
// and leaves the last pivot (a determinant up to sign for full rank) in `last`.
template <class F>
Index bareiss(Mat<Poly<F>>& m, const FieldSpec& field, int* sign, Poly<F>* last) {
  const Index rows = m.rows(), cols = m.cols();
  Poly<F> prev = Poly<F>::one(field);
  int sg = 1;
  Index r = 0;
  for (; r < std::min(rows, cols); ++r) {
    // lowest-degree pivot keeps the intermediate degrees small
    Index pi = -1, pj = -1;
    for (Index i = r; i < rows; ++i) {
      for (Index j = r; j < cols; ++j) {
        if (m(i, j).is_zero()) continue;
        if (pi < 0 || m(i, j).degree() < m(pi, pj).degree()) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    if (pi != r) {
      m.row(pi).swap(m.row(r));
      sg = -sg;
    }
    if (pj != r) {
      m.col(pj).swap(m.col(r));
      sg = -sg;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = r + 1; j < cols; ++j) {
        m(i, j) = exact_div(m(r, r) * m(i, j) - m(i, r) * m(r, j), prev);
      }
      m(i, r) = Poly<F>(field);
    }
    prev = m(r, r);
  }
  if (sign) *sign = sg;
  if (last) *last = prev;
  return r;
}

}  // namespace

template <class F>
Index rank_bareiss(const PolyMatrix<F>& a) {
  Mat<Poly<F>> m = a.entries();
  return bareiss(m, a.field(), static_cast<int*>(nullptr), static_cast<Poly<F>*>(nullptr));
}

template <class F>
Index rank_fraction_field(const PolyMatrix<F>& a) {
  const Index nu = std::min(a.rows(), a.cols());
  if (nu == 0 || a.is_zero()) return 0;
  // a nonzero minor has degree <= deg*nu, so it survives at one of deg*nu+1 points
  const long points = static_cast<long>(a.degree()) * static_cast<long>(nu) + 1;
  if (a.field().is_prime() && static_cast<long>(a.field().modulus()) < points) return rank_bareiss(a);
  Index best = 0;
  for (long t = 0; t < points && best < nu; ++t) {
    best = std::max(best, rank(eval_matrix(a, scalar<F>(a.field(), t))));
  }
  return best;
}

template <class F>
Poly<F> determinant(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (a.rows() == 0) return Poly<F>::one(a.field());
  Mat<Poly<F>> m = a.entries();
  int sign = 1;
  Poly<F> last(a.field());
  Index r = bareiss(m, a.field(), &sign, &last);
  if (r < a.rows()) return Poly<F>(a.field());
  return sign > 0 ? last : -last;
}

template <class F>
bool is_unimodular(const PolyMatrix<F>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("unimodularity of a non-square matrix");
  Poly<F> d = determinant(a);
  return d.degree() == 0;
}

namespace {

std::vector<std::vector<Index>> subsets(Index n, int k) {
  std::vector<std::vector<Index>> out;
  if (k < 0 || k > n) return out;
  std::vector<Index> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& a, int k) {
  std::vector<Poly<F>> out;
  if (k == 0) {
    out.push_back(Poly<F>::one(a.field()));
    return out;
  }
  const auto rs = subsets(a.rows(), k);
  const auto cs = subsets(a.cols(), k);
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Mat<Poly<F>> sub(k, k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
      }
      out.push_back(determinant(PolyMatrix<F>(a.field(), std::move(sub))));
    }
  }
  return out;
}

template <class F>
std::vector<Poly<F>> determinantal_divisors(const PolyMatrix<F>& a) {
  const int nu = static_cast<int>(std::min(a.rows(), a.cols()));
  std::vector<Poly<F>> out;
  for (int k = 1; k <= nu; ++k) {
    Poly<F> g(a.field());
    for (const auto& m : minors(a, k)) {
      g = gcd(g, m);
      if (g.degree() == 0) break;
    }
    out.push_back(g);
  }
  return out;
}

template <class F>
int vector_multiplicity(const PolyMatrix<F>& v, const Poly<F>& base) {
  int best = -1;
  for (Index i = 0; i < v.rows(); ++i) {
    for (Index j = 0; j < v.cols(); ++j) {
      if (v(i, j).is_zero()) continue;
      int e = multiplicity(v(i, j), base).first;
      if (best < 0 || e < best) best = e;
    }
  }
  return best;
}

#define RATSUB_INSTANTIATE(F)                                                        \
  template class PolyMatrix<F>;                                                      \
  template PolyMatrix<F> multiply(const PolyMatrix<F>&, const PolyMatrix<F>&);       \
  template PolyMatrix<F> transpose(const PolyMatrix<F>&);                            \
  template PolyMatrix<F> reversal_matrix(const PolyMatrix<F>&);                      \
  template Mat<F> eval_matrix(const PolyMatrix<F>&, const F&);                       \
  template Mat<F> coefficient(const PolyMatrix<F>&, int);                            \
  template PolyMatrix<F> columns(const PolyMatrix<F>&, const std::vector<Index>&);   \
  template Index rank_fraction_field(const PolyMatrix<F>&);                          \
  template Index rank_bareiss(const PolyMatrix<F>&);                                 \
  template Poly<F> determinant(const PolyMatrix<F>&);                                \
  template bool is_unimodular(const PolyMatrix<F>&);                                 \
  template std::vector<Poly<F>> minors(const PolyMatrix<F>&, int);                   \
  template std::vector<Poly<F>> determinantal_divisors(const PolyMatrix<F>&);        \
  template int vector_multiplicity(const PolyMatrix<F>&, const Poly<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
