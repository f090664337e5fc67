#include "ratsub/dense.hpp"

namespace ratsub {

template <class F>
std::vector<Index> rref(Mat<F>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const F inv = inverse(a(row, col));
    for (Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const F f = a(r, col);
      for (Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
Index rank(Mat<F> a) {
  // forward elimination only
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const F inv = inverse(a(row, col));
    for (Index r = row + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const F f = a(r, col) * inv;
      for (Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    ++row;
  }
  return row;
}

template <class F>
Mat<F> nullspace(const Mat<F>& a, const FieldSpec& field) {
  Mat<F> r = a;
  const std::vector<Index> pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index c : pivots) is_pivot[c] = true;
  const Index n = a.cols();
  Mat<F> basis = zeros<F>(field, n, n - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = scalar<F>(field, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(static_cast<Index>(i), free);
    ++k;
  }
  return basis;
}

template <class F>
Mat<F> multiply(const Mat<F>& a, const Mat<F>& b, const FieldSpec& field) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: inner dimensions differ");
  Mat<F> c = zeros<F>(field, a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <class F>
Vec<F> EchelonBasis<F>::reduce(Vec<F> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Index p = pivots_[i];
    if (is_zero(v(p))) continue;
    const F f = v(p);
    for (Index c = p; c < dim_; ++c) v(c) -= f * rows_[i](c);
  }
  return v;
}

template <class F>
bool EchelonBasis<F>::insert(const Vec<F>& v) {
  if (v.size() != dim_) throw InvalidArgument("EchelonBasis: dimension mismatch");
  Vec<F> r = reduce(v);
  Index p = 0;
  while (p < dim_ && is_zero(r(p))) ++p;
  if (p == dim_) return false;
  const F inv = inverse(r(p));
  for (Index c = p; c < dim_; ++c) r(c) *= inv;
  // keep rows sorted by pivot so a single forward pass reduces completely
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  // rows after pos may have a nonzero entry at p only if their pivot is > p,
  // which is impossible since entries left of a pivot are zero; earlier rows
  // need not be touched because reduce() walks pivots in increasing order.
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

template <class F>
bool EchelonBasis<F>::contains(const Vec<F>& v) const {
  if (v.size() != dim_) throw InvalidArgument("EchelonBasis: dimension mismatch");
  Vec<F> r = reduce(v);
  for (Index c = 0; c < dim_; ++c) {
    if (!is_zero(r(c))) return false;
  }
  return true;
}

#define RATSUB_INSTANTIATE(F)                                              \
  template std::vector<Index> rref(Mat<F>&);                               \
  template Index rank(Mat<F>);                                             \
  template Mat<F> nullspace(const Mat<F>&, const FieldSpec&);              \
  template Mat<F> multiply(const Mat<F>&, const Mat<F>&, const FieldSpec&); \
  template class EchelonBasis<F>;

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
