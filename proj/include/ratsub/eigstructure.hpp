#pragma once

// Complete eigenstructure, root polynomials, and the checker for how the
// eigenstructure moves under x = n(y)/d(y).

#include <string>
#include <vector>

#include "ratsub/minbasis.hpp"
#include "ratsub/smith.hpp"

namespace ratsub {

template <class F>
struct CompleteEigenstructure {
  ElementaryDivisorList<F> finite;
  std::vector<int> infinite;  // ascending
  std::vector<int> right_indices;
  std::vector<int> left_indices;
  Index rank = 0;
  int grade = 0;

  /// finite degrees + infinite exponents + all minimal indices
  int index_sum() const;

  bool operator==(const CompleteEigenstructure&) const = default;
};

/// Throws InternalError if the index sum differs from grade * rank.
template <class F>
CompleteEigenstructure<F> complete_eigenstructure(const PolyMatrix<F>& p);

/// Column basis (reduced echelon) of the evaluations at x0 of a minimal basis of ker P.
template <class F>
Mat<F> ker_at_point(const PolyMatrix<F>& p, const F& x0);

template <class F>
struct RootPolynomial {
  PolyMatrix<F> v;  // p x 1
  F x0;
  int order = 0;
};

/// Order of vanishing of P v at x0; -1 when P v = 0.
template <class F>
int root_poly_order(const PolyMatrix<F>& p, const PolyMatrix<F>& v, const F& x0);

/// v(x0) lies outside ker_{x0} P and P v vanishes at x0 to order >= 1.
template <class F>
bool is_root_polynomial(const PolyMatrix<F>& p, const PolyMatrix<F>& v, const F& x0);

/// Columns of B from the Smith form A P B = S at the positions whose invariant
/// polynomial vanishes at x0; empty when x0 is not a characteristic value.
template <class F>
std::vector<RootPolynomial<F>> maximal_root_polynomials(const PolyMatrix<F>& p, const F& x0);

template <class F>
struct RootTransport {
  PolyMatrix<F> w;  // p x 1 over y
  F y0;
  int m0 = 0;
  int ell = 0;
  int predicted = 0;        // m0 * ell
  int measured = 0;         // order of Q w at y0
  int truncated_order = 0;  // order at x0 of P times the degree-(ell-1) Taylor truncation of v
  bool consistent = false;  // measured == m0 * truncated_order
  bool outside_kernel = false;
  bool matches_claim() const { return measured == predicted; }
};

/// w(y) = sum_{i<ell} d^(ell-1-i) (n - x0 d)^i v_i with v = sum (x-x0)^i v_i.
/// Throws InvalidArgument unless y0 solves x(y) = x0.
template <class F>
RootTransport<F> transform_root_polynomial(const PolyMatrix<F>& p, const RootPolynomial<F>& rp,
                                           const RationalMap<F>& map, const F& y0);

/// One x-side base and one y-side base it maps to.
template <class F>
struct MappingRecord {
  CharPoint<F> x_base;
  bool x_grouped = false;  // x_base is a coprime-base element rather than an irreducible
  std::vector<int> x_exponents;  // positionwise over the rank
  CharPoint<F> y_base;
  bool y_grouped = false;  // y_base is a squarefree group of irreducibles with a common multiplicity
  int multiplicity = 0;
  std::vector<int> predicted;
  std::vector<int> observed;
  bool converse = false;  // m | observed and observed / m == x_exponents
  bool ok = false;

  bool operator==(const MappingRecord&) const = default;
};

struct IndexRecord {
  std::vector<int> x_indices;
  std::vector<int> y_indices;
  bool ok = false;

  bool operator==(const IndexRecord&) const = default;
};

template <class F>
struct TheoremReport {
  int G = 0;
  int grade_p = 0;
  int grade_q = 0;
  Index rank_p = 0;
  Index rank_q = 0;
  std::vector<Poly<F>> invariants_p;
  std::vector<Poly<F>> invariants_q;
  std::vector<int> infinite_p;  // positionwise
  std::vector<int> infinite_q;
  std::vector<MappingRecord<F>> records;
  IndexRecord right;
  IndexRecord left;
  std::vector<int> internal_exponents;  // g - deg d_i; negative when an invariant polynomial outgrows the grade
  bool identity = false;     // d_i^Q == monic(Phi(d_i^P) d^(infinite_p[i]))
  bool exhaustive = false;   // every factor of every d_i^Q is explained by a record
  bool converse = false;
  std::vector<std::string> notes;
  bool verdict = false;

  bool operator==(const TheoremReport&) const = default;
};

/// Computes Q = Phi(P) and both structures from scratch, then compares them
/// record by record. Mismatches go into the verdict, never into exceptions.
template <class F>
TheoremReport<F> verify_theorem(const PolyMatrix<F>& p, const RationalMap<F>& map);

template <class F>
struct MobiusReport {
  bool exponents_invariant = false;  // multiset of (base degree, exponents), infinity as degree 1
  bool indices_invariant = false;
  bool scalar_multiple = false;      // Phi_inverse(Phi(P)) == c P
  bool roundtrip_exact = false;      // eigenstructure after the round trip equals the original
  bool ok() const { return exponents_invariant && indices_invariant && scalar_multiple && roundtrip_exact; }
};

/// Throws InvalidArgument unless G = 1.
template <class F>
MobiusReport<F> verify_mobius_roundtrip(const PolyMatrix<F>& p, const RationalMap<F>& map);

/// Pairwise coprime monic squarefree polynomials such that every input is a
/// product of their powers.
template <class F>
std::vector<Poly<F>> coprime_base(const std::vector<Poly<F>>& polys);

}  // namespace ratsub
