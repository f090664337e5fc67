#pragma once

// Smith normal form over F[x] and the elementary divisors it carries.

#include <vector>

#include "ratsub/ratmap.hpp"

namespace ratsub {

template <class F>
struct SmithDecomposition {
  PolyMatrix<F> A;  // m x m unimodular
  PolyMatrix<F> S;  // m x p diagonal
  PolyMatrix<F> B;  // p x p unimodular
  std::vector<Poly<F>> invariants;  // d_1 | d_2 | ... ; zeros trail
};

/// A P B = S with monic invariants in a divisibility chain. Throws InternalError
/// if the identity fails to hold exactly.
template <class F>
SmithDecomposition<F> smith_form(const PolyMatrix<F>& p);

/// Same diagonal without accumulating A and B.
template <class F>
std::vector<Poly<F>> invariant_polynomials(const PolyMatrix<F>& p);

template <class F>
struct ElementaryDivisorGroup {
  CharPoint<F> base;
  std::vector<int> exponents;  // ascending, positive

  bool operator==(const ElementaryDivisorGroup&) const = default;
};

template <class F>
using ElementaryDivisorList = std::vector<ElementaryDivisorGroup<F>>;

/// Factor each nonzero invariant polynomial and group exponents by base.
template <class F>
ElementaryDivisorList<F> elementary_divisors_finite(const std::vector<Poly<F>>& invariants);

template <class F>
ElementaryDivisorList<F> elementary_divisors_finite(const PolyMatrix<F>& p) {
  return elementary_divisors_finite(invariant_polynomials(p));
}

/// Multiplicity of x in each of the first `rank` invariants of Rev_g P, by position.
template <class F>
std::vector<int> infinite_valuations(const PolyMatrix<F>& p);

/// Positive infinite exponents at the matrix grade, ascending.
template <class F>
std::vector<int> elementary_divisors_infinite(const PolyMatrix<F>& p);

/// Infinite exponents at grade g' >= deg P: each valuation of Rev_k P (k = deg P)
/// shifted by g' - k. Throws InvalidArgument for g' < deg P.
template <class F>
std::vector<int> infinite_structure_at_grade(const PolyMatrix<F>& p, int grade);

}  // namespace ratsub
