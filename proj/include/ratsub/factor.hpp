#pragma once

// Squarefree decomposition and irreducible factorization over Q and Fp.

#include <vector>

#include "ratsub/poly.hpp"

namespace ratsub {

template <class F>
struct Factor {
  Poly<F> base;
  int exponent = 0;
};

template <class F>
struct Factorization {
  F unit;
  std::vector<Factor<F>> factors;

  /// unit * prod base^exponent
  Poly<F> expand(const FieldSpec& field) const;
};

/// Monic, squarefree, pairwise coprime bases with distinct exponents, sorted by
/// exponent. Works in every characteristic (p-th roots are taken over Fp).
/// Throws InvalidArgument for p = 0.
template <class F>
Factorization<F> squarefree_decompose(const Poly<F>& p);

/// Complete factorization into monic irreducibles, bases sorted by degree then
/// coefficients. Over Q a factor search that would exceed the work budget
/// throws BoundExceeded; over Fp it always succeeds.
template <class F>
Factorization<F> factor_irreducible(const Poly<F>& p);

template <class F>
bool is_irreducible(const Poly<F>& p);

/// a^e mod m.
template <class F>
Poly<F> powmod(const Poly<F>& a, const mpz_class& e, const Poly<F>& m);

/// Berlekamp factorization of a monic squarefree polynomial over Fp.
std::vector<Poly<ModP>> berlekamp(const Poly<ModP>& f);

/// Image of an integer-coefficient polynomial in Fp[x].
Poly<ModP> reduce_mod(const Poly<Rational>& f, std::uint32_t p);

}  // namespace ratsub
