#pragma once

// Dense constant matrices over an exact field, stored in Eigen containers.
// Eigen's own decompositions pivot on magnitude and are not used; elimination
// here pivots on exact nonzeros.

#include <vector>

#include <Eigen/Core>

#include "ratsub/field.hpp"
#include "ratsub/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<ratsub::Rational> : GenericNumTraits<ratsub::Rational> {
  using Real = ratsub::Rational;
  using NonInteger = ratsub::Rational;
  using Nested = ratsub::Rational;
  using Literal = ratsub::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<ratsub::ModP> : GenericNumTraits<ratsub::ModP> {
  using Real = ratsub::ModP;
  using NonInteger = ratsub::ModP;
  using Nested = ratsub::ModP;
  using Literal = ratsub::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
};

template <class F>
struct NumTraits<ratsub::Poly<F>> : GenericNumTraits<ratsub::Poly<F>> {
  using Real = ratsub::Poly<F>;
  using NonInteger = ratsub::Poly<F>;
  using Nested = ratsub::Poly<F>;
  using Literal = ratsub::Poly<F>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 1000
  };
};

}  // namespace Eigen

namespace ratsub {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class F>
Mat<F> zeros(const FieldSpec& field, Index rows, Index cols) {
  return Mat<F>::Constant(rows, cols, scalar<F>(field, 0));
}

template <class F>
Mat<F> identity(const FieldSpec& field, Index n) {
  Mat<F> m = zeros<F>(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = scalar<F>(field, 1);
  return m;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<Index> rref(Mat<F>& a);

template <class F>
Index rank(Mat<F> a);

/// Columns form the canonical nullspace basis read off the reduced row echelon form.
template <class F>
Mat<F> nullspace(const Mat<F>& a, const FieldSpec& field);

template <class F>
Mat<F> multiply(const Mat<F>& a, const Mat<F>& b, const FieldSpec& field);

/// Incrementally built echelon basis of a subspace of F^n, used to test
/// membership and extend spans one vector at a time.
template <class F>
class EchelonBasis {
 public:
  EchelonBasis(const FieldSpec& field, Index dim) : field_(field), dim_(dim) {}

  /// Adds v if independent of the current span; reports whether it was added.
  bool insert(const Vec<F>& v);
  bool contains(const Vec<F>& v) const;
  Index size() const { return static_cast<Index>(rows_.size()); }
  Index dim() const { return dim_; }

 private:
  Vec<F> reduce(Vec<F> v) const;

  FieldSpec field_;
  Index dim_;
  std::vector<Vec<F>> rows_;   // pivot entry normalised to 1
  std::vector<Index> pivots_;
};

}  // namespace ratsub
