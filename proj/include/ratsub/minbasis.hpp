#pragma once

// Minimal polynomial bases of kernels and their minimal indices.

#include <vector>

#include "ratsub/ratmap.hpp"

namespace ratsub {

template <class F>
struct MinimalBasis {
  PolyMatrix<F> vectors;     // p x s, columns ordered by degree
  std::vector<int> indices;  // column degrees, ascending

  Index size() const { return static_cast<Index>(indices.size()); }
  int order() const;
};

/// deg(P) * min(m, p) + 1
template <class F>
int default_degree_cap(const PolyMatrix<F>& p);

/// Degree sweep over the block-Toeplitz convolution matrices. A cap below 0
/// selects the default. Throws InternalError if the cap is passed before the
/// kernel is exhausted or the result fails Forney's criterion.
template <class F>
MinimalBasis<F> right_kernel_minimal_basis(const PolyMatrix<F>& p, int degree_cap = -1);

template <class F>
MinimalBasis<F> left_kernel_minimal_basis(const PolyMatrix<F>& p, int degree_cap = -1);

template <class F>
struct ForneyResult {
  bool ok = true;
  Poly<F> minor_gcd;
  int max_minor_degree = 0;
  int order = 0;
};

/// V is minimal iff its s x s minors are coprime and the largest minor degree
/// equals the sum of column degrees. Throws InvalidArgument if P V != 0.
template <class F>
ForneyResult<F> forney_check(const PolyMatrix<F>& p, const PolyMatrix<F>& v);

/// Counts dim ker C_delta - dim ker C_(delta-1) from scratch for each delta.
/// Throws InvalidArgument if the cap is reached first.
template <class F>
std::vector<int> minimal_indices_oracle(const PolyMatrix<F>& p, int degree_cap);

/// Columns w_i = Phi_{beta_i}(v_i), validated as a minimal basis of ker Phi(P).
template <class F>
MinimalBasis<F> transform_minimal_basis(const PolyMatrix<F>& p, const MinimalBasis<F>& v,
                                        const RationalMap<F>& map);

}  // namespace ratsub
