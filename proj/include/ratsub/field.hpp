#pragma once

// Exact scalar fields: arbitrary-precision rationals and integers modulo a prime.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ratsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is outside the size range an exact algorithm is willing to handle.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A self-check failed; always a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// The placeholder field of a default-constructed ModP zero.
  static constexpr FieldSpec unbound_prime() { return FieldSpec(FieldKind::PrimeField, 0); }
  /// No primality test; only for moduli taken from an existing ModP.
  static constexpr FieldSpec trusted_prime(std::uint32_t p) { return FieldSpec(FieldKind::PrimeField, p); }

  /// Accepts "Q" and "Fp:<prime>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  std::uint32_t modulus() const { return p_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime() const { return kind_ == FieldKind::PrimeField; }
  bool is_bound() const { return is_rationals() || p_ != 0; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  /// Common field of two operands; an unbound prime field adopts the other side.
  static FieldSpec join(const FieldSpec& a, const FieldSpec& b);

 private:
  constexpr FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

using Rational = mpq_class;

/// Element of Z/pZ. A default-constructed value is a zero that is not yet tied
/// to a modulus; it adopts the modulus of the first bound operand it meets.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_, Raw{}); }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o);

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    return a.v_ == b.v_ && (a.p_ == b.p_ || a.p_ == 0 || b.p_ == 0);
  }

  ModP inverse() const;

 private:
  struct Raw {};
  ModP(std::uint32_t v, std::uint32_t p, Raw) : v_(v), p_(p) {}
  static std::uint32_t join(std::uint32_t a, std::uint32_t b);

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

// Uniform scalar interface used by the templated algorithms. Only Rational and
// ModP are supported scalar types.

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const ModP& a) { return a.value() == 0; }

Rational inverse(const Rational& a);
inline ModP inverse(const ModP& a) { return a.inverse(); }

/// Canonical total order: numeric for rationals, residue for ModP.
int compare(const Rational& a, const Rational& b);
int compare(const ModP& a, const ModP& b);

/// "a/b" in lowest terms with b > 0 (or "a"); least nonnegative residue mod p.
std::string to_string(const Rational& a);
std::string to_string(const ModP& a);

inline FieldSpec field_of(const Rational&) { return FieldSpec::rationals(); }
inline FieldSpec field_of(const ModP& a) {
  return FieldSpec::trusted_prime(a.modulus());
}

template <class F>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static FieldSpec default_field() { return FieldSpec::rationals(); }
  static Rational from_int(const FieldSpec& field, long n);
  static Rational from_rational(const FieldSpec& field, const mpq_class& q);
};

template <>
struct ScalarTraits<ModP> {
  static FieldSpec default_field() { return FieldSpec::unbound_prime(); }
  static ModP from_int(const FieldSpec& field, long n);
  /// Throws DivisionByZero when the denominator vanishes mod p.
  static ModP from_rational(const FieldSpec& field, const mpq_class& q);
};

template <class F>
F scalar(const FieldSpec& field, long n) {
  return ScalarTraits<F>::from_int(field, n);
}

}  // namespace ratsub
