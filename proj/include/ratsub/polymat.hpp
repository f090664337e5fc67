#pragma once

// Polynomial matrices with an explicit grade.

#include <vector>

#include "ratsub/dense.hpp"
#include "ratsub/poly.hpp"

namespace ratsub {

/// m x p matrix over F[x] with grade g. The grade is a declared upper bound on
/// the degree; operations that depend on it (reversal, substitution) check it.
template <class F>
class PolyMatrix {
 public:
  using Entry = Poly<F>;

  PolyMatrix() = default;
  PolyMatrix(const FieldSpec& field, Index rows, Index cols, int grade = 0);
  /// Throws InvalidArgument if grade < degree.
  PolyMatrix(const FieldSpec& field, Mat<Poly<F>> entries, int grade);
  /// Grade defaults to the degree.
  PolyMatrix(const FieldSpec& field, Mat<Poly<F>> entries);

  static PolyMatrix identity(const FieldSpec& field, Index n, int grade = 0);
  static PolyMatrix constant(const FieldSpec& field, const Mat<F>& c, int grade = 0);

  Index rows() const { return e_.rows(); }
  Index cols() const { return e_.cols(); }
  int grade() const { return grade_; }
  const FieldSpec& field() const { return field_; }

  /// Throws InvalidArgument if g < degree().
  void set_grade(int g);
  PolyMatrix with_grade(int g) const;

  /// Max entry degree; 0 for the zero matrix.
  int degree() const;
  bool is_zero() const;

  const Poly<F>& operator()(Index i, Index j) const { return e_(i, j); }
  /// Writing an entry of degree above the grade raises the grade.
  void set(Index i, Index j, Poly<F> v);

  const Mat<Poly<F>>& entries() const { return e_; }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (!(a(i, j) == b(i, j))) return false;
      }
    }
    return true;
  }

 private:
  FieldSpec field_;
  Mat<Poly<F>> e_;
  int grade_ = 0;
};

/// Grade of the product is the sum of grades.
template <class F>
PolyMatrix<F> multiply(const PolyMatrix<F>& a, const PolyMatrix<F>& b);

template <class F>
PolyMatrix<F> transpose(const PolyMatrix<F>& a);

/// Entrywise reversal with respect to the matrix grade.
template <class F>
PolyMatrix<F> reversal_matrix(const PolyMatrix<F>& a);

template <class F>
Mat<F> eval_matrix(const PolyMatrix<F>& a, const F& c);

/// Coefficient matrix of x^i.
template <class F>
Mat<F> coefficient(const PolyMatrix<F>& a, int i);

/// Columns with the given indices, keeping the grade.
template <class F>
PolyMatrix<F> columns(const PolyMatrix<F>& a, const std::vector<Index>& idx);

/// Rank over F(x).
template <class F>
Index rank_fraction_field(const PolyMatrix<F>& a);

/// Fraction-free elimination; exact over any field.
template <class F>
Index rank_bareiss(const PolyMatrix<F>& a);

/// Bareiss determinant. Throws InvalidArgument for non-square input.
template <class F>
Poly<F> determinant(const PolyMatrix<F>& a);

template <class F>
bool is_unimodular(const PolyMatrix<F>& a);

/// All k x k minors, row subsets outer, column subsets inner, both in
/// lexicographic order.
template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& a, int k);

/// D_1..D_nu: monic gcd of all i x i minors, zero when they all vanish.
template <class F>
std::vector<Poly<F>> determinantal_divisors(const PolyMatrix<F>& a);

/// Valuation of a polynomial vector at a root of base: min multiplicity over
/// nonzero entries, -1 for the zero vector.
template <class F>
int vector_multiplicity(const PolyMatrix<F>& v, const Poly<F>& base);

}  // namespace ratsub
