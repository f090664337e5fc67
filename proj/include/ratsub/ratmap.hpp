#pragma once

// The rational change of variable x = n(y)/d(y) and the substitution operator
// Phi_g(P)(y) = d(y)^g P(n(y)/d(y)).

#include <optional>
#include <vector>

#include "ratsub/factor.hpp"
#include "ratsub/polymat.hpp"

namespace ratsub {

/// A characteristic value: infinity, or a monic irreducible base. A degree-1
/// base x - x0 stands for the field element x0.
template <class F>
class CharPoint {
 public:
  CharPoint() = default;  // infinity
  explicit CharPoint(Poly<F> base) : base_(std::move(base)) {}
  static CharPoint infinity() { return CharPoint(); }
  static CharPoint value(const FieldSpec& field, const F& x0);

  bool is_infinity() const { return !base_.has_value(); }
  /// Throws InvalidArgument at infinity.
  const Poly<F>& base() const;
  /// 1 for infinity, by convention.
  int degree() const { return base_ ? base_->degree() : 1; }
  bool is_linear() const { return base_ && base_->degree() == 1; }
  /// x0 for a linear base; throws InvalidArgument otherwise.
  F root() const;

  friend bool operator==(const CharPoint& a, const CharPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.base_ == *b.base_;
  }

 private:
  std::optional<Poly<F>> base_;
};

/// Finite bases by (degree, coefficients), infinity last.
template <class F>
bool charpoint_less(const CharPoint<F>& a, const CharPoint<F>& b);

template <class F>
std::string to_string(const CharPoint<F>& p, const std::string& var = "x");

template <class F>
class RationalMap {
 public:
  /// Throws InvalidArgument unless n, d are nonzero, coprime, and not both constant.
  RationalMap(Poly<F> n, Poly<F> d);

  const Poly<F>& n() const { return n_; }
  const Poly<F>& d() const { return d_; }
  int N() const { return n_.degree(); }
  int D() const { return d_.degree(); }
  int G() const { return std::max(N(), D()); }
  const FieldSpec& field() const { return n_.field(); }
  /// Coefficient of y^G in n and d (either may be zero).
  F n_G() const { return n_.coeff(G()); }
  F d_G() const { return d_.coeff(G()); }

  /// x(infinity): n_G/d_G when N = D, 0 when N < D, infinity when N > D.
  CharPoint<F> value_at_infinity() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.n_ == b.n_ && a.d_ == b.d_; }

 private:
  Poly<F> n_;
  Poly<F> d_;
};

template <class F>
RationalMap<F> new_map(const Poly<F>& n, const Poly<F>& d) {
  return RationalMap<F>(n, d);
}

/// sum_i a_i n^i d^(g-i). Throws InvalidArgument if g < deg p.
template <class F>
Poly<F> phi_scalar(const Poly<F>& p, int grade, const RationalMap<F>& map);

/// Entrywise phi_scalar at the matrix grade g; the result has grade g*G.
template <class F>
PolyMatrix<F> phi_matrix(const PolyMatrix<F>& p, const RationalMap<F>& map);

enum class DegreeDrop { NgtDGradeSlack, FactorAtXhat, Exact };

template <class F>
struct DegreeBoundReport {
  int q = 0;
  /// deg Phi(P) == q
  bool attained = true;
  DegreeDrop reason = DegreeDrop::Exact;
  std::optional<F> xhat;
};

/// Throws InvalidArgument for the zero matrix.
template <class F>
DegreeBoundReport<F> degree_bound(const PolyMatrix<F>& p, const RationalMap<F>& map);

template <class F>
struct PreimageEntry {
  CharPoint<F> point;
  int multiplicity = 0;
};

template <class F>
struct PreimageSet {
  CharPoint<F> target;
  std::vector<PreimageEntry<F>> entries;  // finite points sorted, infinity last
  int S = 0;
  bool includes_infinity = false;
};

/// Solutions of alpha d(y) = beta n(y) with (alpha, beta) = (x0, 1), or (1, 0) at infinity.
template <class F>
PreimageSet<F> preimage_set(const RationalMap<F>& map, const CharPoint<F>& x0);

template <class F>
struct GroupedPreimage {
  Factorization<F> factors;  // of Phi_{deg q}(q)
  int infinity_multiplicity = 0;
};

/// Irreducible factorization of Phi_{deg q}(q). Throws InvalidArgument if q is
/// not monic irreducible (checked only when check is true).
template <class F>
GroupedPreimage<F> grouped_preimage(const RationalMap<F>& map, const Poly<F>& q, bool check = true);

/// Inverse of a degree-1 map (a y + b)/(c y + e): (b - e x)/(c x - a).
template <class F>
RationalMap<F> mobius_inverse(const RationalMap<F>& map);

/// Numerator and denominator swapped.
template <class F>
RationalMap<F> psi_dual(const RationalMap<F>& map);

}  // namespace ratsub
