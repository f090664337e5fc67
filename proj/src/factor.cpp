#include "ratsub/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "ratsub/dense.hpp"

namespace ratsub {

namespace {

// Upper bound on candidate factors tried by one Kronecker search.
constexpr double kKroneckerBudget = 5e6;

template <class F>
void sort_factors(std::vector<Factor<F>>& v) {
  std::sort(v.begin(), v.end(), [](const Factor<F>& a, const Factor<F>& b) {
    int c = compare(a.base, b.base);
    return c != 0 ? c < 0 : a.exponent < b.exponent;
  });
}

// x^(kp) coefficients -> x^k; over a prime field every scalar is its own p-th root
Poly<ModP> pth_root(const Poly<ModP>& f) {
  const std::uint32_t p = f.field().modulus();
  std::vector<ModP> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeffs()[i]);
  return Poly<ModP>(f.field(), std::move(c));
}

template <class F>
void squarefree_rec(const Poly<F>& f, int mult, std::map<int, Poly<F>>& acc) {
  if (f.degree() < 1) return;
  auto add = [&](int e, const Poly<F>& fac) {
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, fac);
    } else {
      it->second *= fac;
    }
  };
  Poly<F> fd = derivative(f);
  if (fd.is_zero()) {
    if constexpr (std::is_same_v<F, ModP>) {
      squarefree_rec(pth_root(f), mult * static_cast<int>(f.field().modulus()), acc);
      return;
    } else {
      throw InternalError("zero derivative of a nonconstant rational polynomial");
    }
  }
  Poly<F> c = gcd(f, fd);
  Poly<F> w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly<F> y = gcd(w, c);
    Poly<F> fac = exact_div(w, y);
    if (fac.degree() > 0) add(i * mult, fac);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    if constexpr (std::is_same_v<F, ModP>) {
      squarefree_rec(pth_root(c), mult * static_cast<int>(f.field().modulus()), acc);
    } else {
      throw InternalError("squarefree decomposition left a repeated factor over Q");
    }
  }
}

// ---- integer helpers for the Kronecker search over Q ----

struct Point {
  long a;
  mpz_class value;
  std::vector<mpz_class> divisors;  // positive
};

// Positive divisors of |v|, or empty if |v| does not factor by small trial division.
std::vector<mpz_class> small_divisors(const mpz_class& v) {
  mpz_class n = abs(v);
  std::vector<std::pair<mpz_class, int>> pf;
  constexpr unsigned long kTrial = 2000;
  for (unsigned long d = 2; d <= kTrial && n > 1; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
      }
      pf.emplace_back(mpz_class(d), e);
    }
  }
  if (n > 1) {
    // cofactor with no factor <= kTrial is prime when below kTrial^2
    if (n >= mpz_class(kTrial) * kTrial) return {};
    pf.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (auto& [q, e] : pf) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
    if (divs.size() > 4096) return {};
  }
  return divs;
}

std::vector<mpz_class> int_coeffs(const Poly<Rational>& f) {
  std::vector<mpz_class> out;
  for (const Rational& c : f.coeffs()) {
    if (c.get_den() != 1) throw InternalError("expected integer coefficients");
    out.push_back(c.get_num());
  }
  return out;
}

mpz_class eval_int(const std::vector<mpz_class>& c, long a) {
  mpz_class r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * a + c[i];
  return r;
}

// Degrees d for which a factor of degree d is not excluded by the mod-p patterns.
std::vector<bool> degree_pattern(const Poly<Rational>& f) {
  const int n = f.degree();
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  const mpz_class lead = f.lead().get_num();
  int used = 0;
  for (std::uint32_t p = 2; p < 400 && used < 7; ++p) {
    if (!is_prime_number(p) || mpz_divisible_ui_p(lead.get_mpz_t(), p)) continue;
    Poly<ModP> fp = monic(reduce_mod(f, p));
    if (gcd(fp, derivative(fp)).degree() > 0) continue;
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (const auto& g : berlekamp(fp)) {
      for (int s = n; s >= g.degree(); --s) {
        if (sums[s - g.degree()]) sums[s] = true;
      }
    }
    for (int d = 0; d <= n; ++d) allowed[d] = allowed[d] && sums[d];
    ++used;
    bool trivial = true;
    for (int d = 1; d < n; ++d) trivial = trivial && !allowed[d];
    if (trivial) break;
  }
  return allowed;
}

class Kronecker {
 public:
  explicit Kronecker(const Poly<Rational>& f) : f_(f), c_(int_coeffs(f)) {}

  // Primitive integer factor of degree k with positive lead, if one exists.
  std::optional<Poly<Rational>> find(int k) {
    const FieldSpec q = FieldSpec::rationals();
    std::vector<const Point*> pts = choose_points(k);
    std::vector<mpz_class> leads = small_divisors(c_.back());
    if (leads.empty()) throw BoundExceeded("Kronecker search: leading coefficient too large to factor");

    double combos = static_cast<double>(leads.size());
    for (const Point* p : pts) combos *= 2.0 * static_cast<double>(p->divisors.size());
    if (combos > kKroneckerBudget) {
      throw BoundExceeded("Kronecker search for a degree-" + std::to_string(k) + " factor of a degree-" +
                          std::to_string(f_.degree()) + " polynomial exceeds the work budget");
    }

    // g = c*W + sum v_i L_i; scaled by D to stay integral
    Poly<Rational> w = Poly<Rational>::one(q);
    for (const Point* p : pts) w *= Poly<Rational>::from_ints(q, {-p->a, 1});
    std::vector<Poly<Rational>> lag;
    mpz_class den = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Poly<Rational> l = Poly<Rational>::one(q);
      mpz_class d = 1;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        l *= Poly<Rational>::from_ints(q, {-pts[j]->a, 1});
        d *= pts[i]->a - pts[j]->a;
      }
      lag.push_back(l * Rational(1, 1) * inverse(Rational(d)));
      mpz_class ad = abs(d);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ad.get_mpz_t());
    }
    auto scaled = [&](const Poly<Rational>& a) {
      std::vector<mpz_class> out(static_cast<std::size_t>(k) + 1, 0);
      for (int t = 0; t <= a.degree(); ++t) {
        Rational s = a.coeffs()[t] * Rational(den);
        out[t] = s.get_num();
      }
      return out;
    };
    const std::vector<mpz_class> dw = scaled(w);
    std::vector<std::vector<mpz_class>> dl;
    for (const auto& l : lag) dl.push_back(scaled(l));

    const mpz_class f0 = c_.front();
    const std::size_t npts = pts.size();
    // digit j of point i: divisor index j/2, sign j%2
    auto value = [&](std::size_t i, std::size_t j) {
      mpz_class v = pts[i]->divisors[j / 2];
      return (j % 2) ? mpz_class(-v) : v;
    };

    for (const mpz_class& lc : leads) {
      std::vector<std::size_t> digit(npts, 0);
      std::vector<mpz_class> acc(static_cast<std::size_t>(k) + 1, 0);
      for (std::size_t i = 0; i < npts; ++i) {
        mpz_class v = value(i, 0);
        for (int t = 0; t <= k; ++t) acc[t] += v * dl[i][t];
      }
      std::vector<mpz_class> cand(static_cast<std::size_t>(k) + 1);
      for (;;) {
        bool integral = true;
        for (int t = 0; t <= k && integral; ++t) {
          cand[t] = lc * dw[t] + acc[t];
          integral = mpz_divisible_p(cand[t].get_mpz_t(), den.get_mpz_t()) != 0;
        }
        if (integral) {
          std::vector<Rational> gc;
          for (int t = 0; t <= k; ++t) gc.emplace_back(cand[t] / den);
          Poly<Rational> g(q, std::move(gc));
          const mpz_class g0 = g.coeffs().empty() ? mpz_class(0) : g.coeffs()[0].get_num();
          if (g.degree() == k && g0 != 0 && mpz_divisible_p(f0.get_mpz_t(), g0.get_mpz_t()) &&
              divides(g, f_)) {
            return primitive_part(g);
          }
        }
        // odometer step
        std::size_t i = 0;
        for (; i < npts; ++i) {
          mpz_class old = value(i, digit[i]);
          if (++digit[i] == 2 * pts[i]->divisors.size()) digit[i] = 0;
          mpz_class delta = value(i, digit[i]) - old;
          for (int t = 0; t <= k; ++t) acc[t] += delta * dl[i][t];
          if (digit[i] != 0) break;
        }
        if (i == npts) break;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<const Point*> choose_points(int k) {
    const std::size_t want = static_cast<std::size_t>(k);
    while (points_.size() < 2 * want + 4 && next_ <= 60) {
      for (long a : {next_, -next_}) {
        if (a == 0 && next_ != 0) continue;
        mpz_class v = eval_int(c_, a);
        if (v == 0) continue;
        std::vector<mpz_class> divs = small_divisors(v);
        if (!divs.empty()) points_.push_back(Point{a, v, std::move(divs)});
        if (next_ == 0) break;
      }
      ++next_;
    }
    if (points_.size() < want) {
      throw BoundExceeded("Kronecker search: not enough evaluation points with factorable values");
    }
    std::vector<const Point*> order;
    for (const Point& p : points_) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(), [](const Point* a, const Point* b) {
      return a->divisors.size() < b->divisors.size();
    });
    order.resize(want);
    return order;
  }

  Poly<Rational> f_;
  std::vector<mpz_class> c_;
  std::vector<Point> points_;
  long next_ = 0;
};

// f primitive integral, squarefree, f(0) != 0; factors have degree >= kmin
void split_q(const Poly<Rational>& f, int kmin, std::vector<Poly<Rational>>& out) {
  const int n = f.degree();
  if (n <= 1) {
    if (n == 1) out.push_back(monic(f));
    return;
  }
  std::vector<bool> allowed = degree_pattern(f);
  Kronecker search(f);
  for (int k = kmin; 2 * k <= n; ++k) {
    if (!allowed[k]) continue;
    if (auto g = search.find(k)) {
      out.push_back(monic(*g));
      split_q(primitive_part(exact_div(f, *g)), k, out);
      return;
    }
  }
  out.push_back(monic(f));
}

std::vector<Poly<Rational>> irreducibles_q(const Poly<Rational>& f) {
  std::vector<Poly<Rational>> out;
  Poly<Rational> g = primitive_part(f);
  const FieldSpec q = FieldSpec::rationals();
  if (g.degree() >= 1 && is_zero(g.coeffs()[0])) {
    out.push_back(Poly<Rational>::variable(q));
    g = exact_div(g, Poly<Rational>::variable(q));
  }
  split_q(g, 1, out);
  return out;
}

}  // namespace

template <class F>
Poly<F> Factorization<F>::expand(const FieldSpec& field) const {
  Poly<F> r = Poly<F>::constant(field, unit);
  for (const auto& f : factors) r *= pow(f.base, f.exponent);
  return r;
}

template <class F>
Factorization<F> squarefree_decompose(const Poly<F>& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
  std::map<int, Poly<F>> acc;
  squarefree_rec(monic(p), 1, acc);
  Factorization<F> out{p.lead(), {}};
  for (auto& [e, b] : acc) out.factors.push_back({monic(b), e});
  return out;
}

template <class F>
Factorization<F> factor_irreducible(const Poly<F>& p) {
  Factorization<F> sq = squarefree_decompose(p);
  Factorization<F> out{sq.unit, {}};
  for (const auto& [b, e] : sq.factors) {
    if constexpr (std::is_same_v<F, ModP>) {
      for (auto& u : berlekamp(b)) out.factors.push_back({std::move(u), e});
    } else {
      for (auto& u : irreducibles_q(b)) out.factors.push_back({std::move(u), e});
    }
  }
  sort_factors(out.factors);
  return out;
}

template <class F>
bool is_irreducible(const Poly<F>& p) {
  if (p.degree() < 1) return false;
  Factorization<F> f = factor_irreducible(p);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

template <class F>
Poly<F> powmod(const Poly<F>& a, const mpz_class& e, const Poly<F>& m) {
  if (sgn(e) < 0) throw InvalidArgument("powmod: negative exponent");
  Poly<F> base = divmod(a, m).remainder;
  Poly<F> r = divmod(Poly<F>::one(m.field()), m).remainder;
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    r = divmod(r * r, m).remainder;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = divmod(r * base, m).remainder;
  }
  return r;
}

Poly<ModP> reduce_mod(const Poly<Rational>& f, std::uint32_t p) {
  const FieldSpec fp = FieldSpec::prime(p);
  std::vector<ModP> c;
  for (const Rational& a : f.coeffs()) c.push_back(ScalarTraits<ModP>::from_rational(fp, a));
  return Poly<ModP>(fp, std::move(c));
}

std::vector<Poly<ModP>> berlekamp(const Poly<ModP>& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const FieldSpec field = f.field();
  const std::uint32_t p = field.modulus();

  // rows of Q: x^(ip) mod f
  const Poly<ModP> xp = powmod(Poly<ModP>::variable(field), mpz_class(p), f);
  Mat<ModP> m = zeros<ModP>(field, n, n);
  Poly<ModP> row = Poly<ModP>::one(field);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m(k, i) = row.coeff(k);
    m(i, i) -= ModP(1, p);
    row = divmod(row * xp, f).remainder;
  }
  const Mat<ModP> kernel = nullspace(m, field);
  const Index r = kernel.cols();
  if (r == 1) return {f};

  std::vector<Poly<ModP>> basis;
  for (Index j = 0; j < r; ++j) {
    std::vector<ModP> c(kernel.col(j).data(), kernel.col(j).data() + n);
    Poly<ModP> h(field, std::move(c));
    if (h.degree() > 0) basis.push_back(std::move(h));
  }

  std::vector<Poly<ModP>> factors{f};
  if (p <= 257) {
    for (const auto& h : basis) {
      std::vector<Poly<ModP>> next;
      for (const auto& u : factors) {
        if (u.degree() <= 1) {
          next.push_back(u);
          continue;
        }
        Poly<ModP> rest = u;
        for (std::uint32_t s = 0; s < p && rest.degree() > 0; ++s) {
          Poly<ModP> g = gcd(rest, h - Poly<ModP>::constant(field, ModP(s, p)));
          if (g.degree() > 0) {
            next.push_back(g);
            rest = exact_div(rest, g);
          }
        }
      }
      factors = std::move(next);
      if (static_cast<Index>(factors.size()) == r) break;
    }
  } else {
    // random elements of the Berlekamp algebra split factors with probability ~1/2
    std::mt19937_64 rng(0x5eedULL + p);
    const mpz_class half = (mpz_class(p) - 1) / 2;
    while (static_cast<Index>(factors.size()) < r) {
      Poly<ModP> h(field);
      for (const auto& b : basis) h += b * ModP(static_cast<std::int64_t>(rng() % p), p);
      std::vector<Poly<ModP>> next;
      for (const auto& u : factors) {
        if (u.degree() <= 1) {
          next.push_back(u);
          continue;
        }
        Poly<ModP> t = powmod(h, half, u) - Poly<ModP>::one(field);
        Poly<ModP> g = t.is_zero() ? u : gcd(u, t);
        if (g.degree() > 0 && g.degree() < u.degree()) {
          next.push_back(g);
          next.push_back(exact_div(u, g));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  if (static_cast<Index>(factors.size()) != r) throw InternalError("Berlekamp splitting incomplete");
  for (auto& g : factors) g = monic(g);
  return factors;
}

#define RATSUB_INSTANTIATE(F)                                                    \
  template struct Factorization<F>;                                              \
  template Factorization<F> squarefree_decompose(const Poly<F>&);                \
  template Factorization<F> factor_irreducible(const Poly<F>&);                  \
  template bool is_irreducible(const Poly<F>&);                                  \
  template Poly<F> powmod(const Poly<F>&, const mpz_class&, const Poly<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
