#include "ratsub/field.hpp"

#include <charconv>

namespace ratsub {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) {
    throw InvalidArgument("prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() &&
        p < (1ull << 31)) {
      return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw InvalidArgument("unsupported field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::join(const FieldSpec& a, const FieldSpec& b) {
  if (a == b) return a;
  if (a.is_prime() && b.is_prime()) {
    if (a.p_ == 0) return b;
    if (b.p_ == 0) return a;
  }
  throw FieldMismatch("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

ModP::ModP(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) {
    if (value != 0) throw InvalidArgument("nonzero ModP value needs a modulus");
    v_ = 0;
    return;
  }
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

std::uint32_t ModP::join(std::uint32_t a, std::uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw FieldMismatch("field mismatch: Fp:" + std::to_string(a) + " vs Fp:" + std::to_string(b));
}

ModP& ModP::operator+=(const ModP& o) {
  p_ = join(p_, o.p_);
  std::uint64_t s = std::uint64_t(v_) + o.v_;
  if (p_ != 0 && s >= p_) s -= p_;
  v_ = static_cast<std::uint32_t>(s);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  p_ = join(p_, o.p_);
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  p_ = join(p_, o.p_);
  v_ = p_ == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
  return *this;
}

ModP& ModP::operator/=(const ModP& o) { return *this *= o.inverse(); }

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero in Fp");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw DivisionByZero("inverse of zero rational");
  return Rational(1) / a;
}

int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

int compare(const ModP& a, const ModP& b) {
  return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
}

std::string to_string(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string to_string(const ModP& a) { return std::to_string(a.value()); }

Rational ScalarTraits<Rational>::from_int(const FieldSpec& field, long n) {
  if (!field.is_rationals()) throw FieldMismatch("expected Q, got " + field.to_string());
  return Rational(n);
}

Rational ScalarTraits<Rational>::from_rational(const FieldSpec& field, const mpq_class& q) {
  if (!field.is_rationals()) throw FieldMismatch("expected Q, got " + field.to_string());
  return q;
}

ModP ScalarTraits<ModP>::from_int(const FieldSpec& field, long n) {
  if (!field.is_prime()) throw FieldMismatch("expected a prime field, got " + field.to_string());
  return ModP(n, field.modulus());
}

ModP ScalarTraits<ModP>::from_rational(const FieldSpec& field, const mpq_class& q) {
  if (!field.is_prime() || field.modulus() == 0) {
    throw FieldMismatch("expected a prime field, got " + field.to_string());
  }
  const std::uint32_t p = field.modulus();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw DivisionByZero("denominator " + q.get_den().get_str() + " is not invertible mod " +
                         std::to_string(p));
  }
  ModP n(num.get_si(), p);
  ModP d(den.get_si(), p);
  return n / d;
}

}  // namespace ratsub
