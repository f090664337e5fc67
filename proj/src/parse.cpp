#include "ratsub/parse.hpp"

#include <cctype>

namespace ratsub {

namespace {

constexpr unsigned long kMaxExponent = 4096;

template <class F>
class Parser {
 public:
  Parser(std::string_view s, const FieldSpec& field, const std::string& var) : s_(s), field_(field), var_(var) {}

  Poly<F> run() {
    Poly<F> v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Poly<F> expr() {
    skip();
    if (i_ == s_.size()) fail("empty expression");
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly<F> v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Poly<F> term() {
    Poly<F> v = factor();
    while (eat('*')) v *= factor();
    return v;
  }

  Poly<F> factor() {
    Poly<F> b = base();
    if (!eat('^')) return b;
    skip();
    const std::size_t at = i_;
    const std::string digits = uint_digits();
    if (digits.size() > 4 || std::stoul(digits) > kMaxExponent) {
      i_ = at;
      fail("exponent too large");
    }
    return pow(b, static_cast<int>(std::stoul(digits)));
  }

  Poly<F> base() {
    skip();
    if (i_ == s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly<F> v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly<F>::constant(field_, rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = i_;
      std::string name;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) name += s_[i_++];
      if (name != var_) {
        i_ = at;
        fail("unknown variable '" + name + "'");
      }
      return Poly<F>::variable(field_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string uint_digits() {
    std::string d;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  F rational() {
    const std::size_t at = i_;
    mpq_class q{mpz_class(uint_digits())};
    if (eat('/')) {
      skip();
      const std::size_t den_at = i_;
      mpz_class den(uint_digits());
      if (den == 0) {
        i_ = den_at;
        fail("zero denominator");
      }
      q = mpq_class(q.get_num(), den);
      q.canonicalize();
    }
    try {
      return ScalarTraits<F>::from_rational(field_, q);
    } catch (const DivisionByZero&) {
      i_ = at;
      fail("denominator not invertible in " + field_.to_string());
    }
  }

  std::string_view s_;
  const FieldSpec& field_;
  const std::string& var_;
  std::size_t i_ = 0;
};

}  // namespace

template <class F>
Poly<F> parse_poly(std::string_view src, const FieldSpec& field, const std::string& var) {
  return Parser<F>(src, field, var).run();
}

template <class F>
F parse_scalar(std::string_view src, const FieldSpec& field) {
  const Poly<F> p = Parser<F>(src, field, "").run();
  return p.is_zero() ? scalar<F>(field, 0) : p.coeff(0);
}

template Poly<Rational> parse_poly(std::string_view, const FieldSpec&, const std::string&);
template Poly<ModP> parse_poly(std::string_view, const FieldSpec&, const std::string&);
template Rational parse_scalar(std::string_view, const FieldSpec&);
template ModP parse_scalar(std::string_view, const FieldSpec&);

}  // namespace ratsub
