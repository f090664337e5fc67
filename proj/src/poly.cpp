#include "ratsub/poly.hpp"

#include <algorithm>
#include <type_traits>

namespace ratsub {

template <class F>
Poly<F>::Poly(const FieldSpec& field, std::vector<F> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (field_.is_prime()) {
    for (const F& c : c_) adopt(field_of(c));
  }
  if constexpr (std::is_same_v<F, Rational>) {
    for (F& c : c_) c.canonicalize();  // mpq_class(a, b) is not reduced
  }
  trim();
}

template <class F>
Poly<F> Poly<F>::constant(const FieldSpec& field, const F& c) {
  return Poly(field, std::vector<F>{c});
}

template <class F>
Poly<F> Poly<F>::monomial(const FieldSpec& field, const F& c, int k) {
  if (k < 0) throw InvalidArgument("negative monomial exponent");
  std::vector<F> v(static_cast<std::size_t>(k) + 1, scalar<F>(field, 0));
  v[k] = c;
  return Poly(field, std::move(v));
}

template <class F>
Poly<F> Poly<F>::from_ints(const FieldSpec& field, const std::vector<long>& coeffs) {
  std::vector<F> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(scalar<F>(field, c));
  return Poly(field, std::move(v));
}

template <class F>
void Poly<F>::trim() {
  while (!c_.empty() && ratsub::is_zero(c_.back())) c_.pop_back();
}

template <class F>
bool Poly<F>::is_one() const {
  return c_.size() == 1 && c_[0] == scalar<F>(field_, 1);
}

template <class F>
bool Poly<F>::is_monic() const {
  return !c_.empty() && c_.back() == scalar<F>(field_, 1);
}

template <class F>
const F& Poly<F>::lead() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return c_.back();
}

template <class F>
F Poly<F>::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_scalar();
  return c_[i];
}

template <class F>
int Poly<F>::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!ratsub::is_zero(c_[i])) return static_cast<int>(i);
  }
  return -1;
}

template <class F>
Poly<F> Poly<F>::operator-() const {
  Poly r = *this;
  for (F& c : r.c_) c = -c;
  return r;
}

template <class F>
Poly<F>& Poly<F>::operator+=(const Poly& o) {
  adopt(o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_scalar());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

template <class F>
Poly<F>& Poly<F>::operator-=(const Poly& o) {
  adopt(o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_scalar());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

template <class F>
Poly<F>& Poly<F>::operator*=(const Poly& o) {
  adopt(o.field_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<F> r(c_.size() + o.c_.size() - 1, zero_scalar());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (ratsub::is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

template <class F>
Poly<F>& Poly<F>::operator*=(const F& c) {
  if (field_.is_prime()) adopt(field_of(c));
  for (F& a : c_) a *= c;
  trim();
  return *this;
}

template <class F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldSpec field = FieldSpec::join(a.field(), b.field());
  if (a.degree() < b.degree()) return {Poly<F>(field), a};
  std::vector<F> r = a.coeffs();
  const int db = b.degree();
  const F inv_lead = inverse(b.lead());
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db + 1), scalar<F>(field, 0));
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    F t = r[i] * inv_lead;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
    q[i - db] = t;
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(field, std::move(q)), Poly<F>(field, std::move(r))};
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("exact_div: divisor does not divide");
  return q;
}

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).remainder.is_zero();
}

template <class F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return a * inverse(a.lead());
}

template <class F>
Poly<F> primitive_part(const Poly<F>& a) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (a.is_zero()) return a;
    mpz_class den = 1, num = 0;
    for (const Rational& c : a.coeffs()) {
      mpz_class d = c.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (const Rational& c : a.coeffs()) {
      mpz_class n = c.get_num() * (den / c.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(a.lead()) < 0) scale = -scale;
    return a * scale;
  } else {
    return monic(a);
  }
}

template <class F>
Poly<F> derivative(const Poly<F>& a) {
  if (a.degree() < 1) return Poly<F>(a.field());
  std::vector<F> d;
  d.reserve(a.coeffs().size() - 1);
  for (int i = 1; i <= a.degree(); ++i) d.push_back(a.coeffs()[i] * scalar<F>(a.field(), i));
  return Poly<F>(a.field(), std::move(d));
}

template <class F>
F evaluate(const Poly<F>& a, const F& c) {
  F r = c - c;
  for (int i = a.degree(); i >= 0; --i) {
    r *= c;
    r += a.coeffs()[i];
  }
  return r;
}

template <class F>
Poly<F> pow(const Poly<F>& a, int k) {
  if (k < 0) throw InvalidArgument("negative polynomial power");
  Poly<F> result = Poly<F>::one(a.field());
  Poly<F> base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

template <class F>
Poly<F> reversal(const Poly<F>& z, int grade) {
  if (grade < z.degree() || grade < 0) {
    throw InvalidArgument("reversal: grade " + std::to_string(grade) + " below degree " +
                          std::to_string(z.degree()));
  }
  if (z.is_zero()) return z;
  std::vector<F> r(static_cast<std::size_t>(grade) + 1, z.zero_scalar());
  for (int i = 0; i <= z.degree(); ++i) r[grade - i] = z.coeffs()[i];
  return Poly<F>(z.field(), std::move(r));
}

template <class F>
std::vector<F> taylor_coeffs(const Poly<F>& a, const F& x0) {
  // repeated synthetic division by (x - x0); each remainder is the next coefficient
  std::vector<F> out;
  std::vector<F> c = a.coeffs();
  while (!c.empty()) {
    const std::size_t n = c.size() - 1;
    std::vector<F> q(n, x0 - x0);
    F acc = c[n];
    for (std::size_t i = n; i-- > 0;) {
      q[i] = acc;
      acc = c[i] + acc * x0;
    }
    out.push_back(acc);
    c = std::move(q);
  }
  return out;
}

template <class F>
ExtendedGcd<F> gcd_extended(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  const FieldSpec field = FieldSpec::join(a.field(), b.field());
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::one(field), s1(field);
  Poly<F> t0(field), t1 = Poly<F>::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class F>
Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly<F> r = divmod(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return monic(r0);
}

template <class F>
Poly<F> lcm(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<F>(FieldSpec::join(a.field(), b.field()));
  return monic(exact_div(a * b, gcd(a, b)));
}

template <class F>
std::pair<int, Poly<F>> multiplicity(const Poly<F>& p, const Poly<F>& base) {
  if (p.is_zero()) throw InvalidArgument("multiplicity in the zero polynomial");
  if (base.degree() < 1) throw InvalidArgument("multiplicity of a constant base");
  int e = 0;
  Poly<F> rest = p;
  for (;;) {
    auto [q, r] = divmod(rest, base);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++e;
  }
  return {e, rest};
}

template <class F>
int compare(const Poly<F>& a, const Poly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = 0; i <= a.degree(); ++i) {
    int c = compare(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

template <class F>
std::string to_string(const Poly<F>& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= a.degree(); ++k) {
    const F& c = a.coeffs()[k];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    std::string term;
    if (k == 0) {
      term = cs;
    } else {
      std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
      if (cs == "1") {
        term = mono;
      } else if (cs == "-1") {
        term = "-" + mono;
      } else {
        term = cs + "*" + mono;
      }
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out;
}

#define RATSUB_INSTANTIATE(F)                                                     \
  template class Poly<F>;                                                         \
  template DivMod<F> divmod(const Poly<F>&, const Poly<F>&);                      \
  template Poly<F> exact_div(const Poly<F>&, const Poly<F>&);                     \
  template bool divides(const Poly<F>&, const Poly<F>&);                          \
  template Poly<F> monic(const Poly<F>&);                                         \
  template Poly<F> primitive_part(const Poly<F>&);                                \
  template Poly<F> derivative(const Poly<F>&);                                    \
  template F evaluate(const Poly<F>&, const F&);                                  \
  template Poly<F> pow(const Poly<F>&, int);                                      \
  template Poly<F> reversal(const Poly<F>&, int);                                 \
  template std::vector<F> taylor_coeffs(const Poly<F>&, const F&);                \
  template ExtendedGcd<F> gcd_extended(const Poly<F>&, const Poly<F>&);           \
  template Poly<F> gcd(const Poly<F>&, const Poly<F>&);                           \
  template Poly<F> lcm(const Poly<F>&, const Poly<F>&);                           \
  template std::pair<int, Poly<F>> multiplicity(const Poly<F>&, const Poly<F>&);  \
  template int compare(const Poly<F>&, const Poly<F>&);                           \
  template std::string to_string(const Poly<F>&, const std::string&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
