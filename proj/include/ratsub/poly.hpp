#pragma once

// Dense univariate polynomials over an exact field.

#include <string>
#include <utility>
#include <vector>

#include "ratsub/field.hpp"

namespace ratsub {

/// Coefficients are stored in ascending powers; the zero polynomial has no
/// coefficients and degree -1.
template <class F>
class Poly {
 public:
  using Scalar = F;

  Poly() : field_(ScalarTraits<F>::default_field()) {}
  explicit Poly(const FieldSpec& field) : field_(field) {}
  Poly(const FieldSpec& field, std::vector<F> coeffs);

  static Poly constant(const FieldSpec& field, const F& c);
  static Poly monomial(const FieldSpec& field, const F& c, int k);
  static Poly variable(const FieldSpec& field) { return monomial(field, scalar<F>(field, 1), 1); }
  static Poly one(const FieldSpec& field) { return constant(field, scalar<F>(field, 1)); }
  /// Integer coefficients, ascending.
  static Poly from_ints(const FieldSpec& field, const std::vector<long>& coeffs);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;
  const F& lead() const;
  F coeff(int i) const;
  const std::vector<F>& coeffs() const { return c_; }
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;

  F zero_scalar() const { return scalar<F>(field_, 0); }
  F one_scalar() const { return scalar<F>(field_, 1); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const F& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r = a;
    r *= b;
    return r;
  }
  friend Poly operator*(Poly a, const F& c) { return a *= c; }
  friend Poly operator*(const F& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return a.c_.empty() || a.field_ == b.field_ || !a.field_.is_bound() || !b.field_.is_bound();
  }

 private:
  void trim();
  void adopt(const FieldSpec& other) { field_ = FieldSpec::join(field_, other); }

  FieldSpec field_;
  std::vector<F> c_;
};

template <class F>
struct DivMod {
  Poly<F> quotient;
  Poly<F> remainder;
};

/// Throws DivisionByZero for b = 0.
template <class F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b);

/// a / b, throwing InvalidArgument unless b divides a exactly.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b);

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a);

/// Scaled by the inverse of the leading coefficient; zero stays zero.
template <class F>
Poly<F> monic(const Poly<F>& a);

/// Over Q: integer coefficients with gcd 1 and positive leading coefficient.
/// Over Fp: same as monic.
template <class F>
Poly<F> primitive_part(const Poly<F>& a);

template <class F>
Poly<F> derivative(const Poly<F>& a);

template <class F>
F evaluate(const Poly<F>& a, const F& c);

template <class F>
Poly<F> pow(const Poly<F>& a, int k);

/// sum_{i=0}^{g} a_{g-i} x^i, i.e. x^g a(1/x). Throws InvalidArgument if g < deg a.
template <class F>
Poly<F> reversal(const Poly<F>& z, int grade);

/// Coefficients c_i with a(x) = sum_i c_i (x - x0)^i.
template <class F>
std::vector<F> taylor_coeffs(const Poly<F>& a, const F& x0);

template <class F>
struct ExtendedGcd {
  Poly<F> g;
  Poly<F> u;
  Poly<F> v;
};

/// Monic g = u*a + v*b. Throws InvalidArgument if both inputs are zero.
template <class F>
ExtendedGcd<F> gcd_extended(const Poly<F>& a, const Poly<F>& b);

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b);

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b);

/// Largest e with base^e | p (p nonzero, base nonconstant), and p / base^e.
template <class F>
std::pair<int, Poly<F>> multiplicity(const Poly<F>& p, const Poly<F>& base);

/// Lexicographic order on ascending coefficient lists, shorter first.
template <class F>
int compare(const Poly<F>& a, const Poly<F>& b);

/// Canonical expression in ascending powers, e.g. "-20*x+x^2", "-5/2+y", "0".
template <class F>
std::string to_string(const Poly<F>& a, const std::string& var = "x");

}  // namespace ratsub
