#include "ratsub/smith.hpp"

#include <algorithm>
#include <map>

namespace ratsub {

namespace {

template <class F>
class Reducer {
 public:
  Reducer(const PolyMatrix<F>& p, bool track)
      : field_(p.field()), s_(p.entries()), track_(track) {
    if (track_) {
      a_ = PolyMatrix<F>::identity(field_, p.rows()).entries();
      b_ = PolyMatrix<F>::identity(field_, p.cols()).entries();
    }
  }

  void run() {
    const Index nu = std::min(s_.rows(), s_.cols());
    rank_ = 0;
    for (Index t = 0; t < nu; ++t) {
      if (!eliminate(t)) break;
      ++rank_;
    }
    repair_divisibility();
    for (Index t = 0; t < rank_; ++t) {
      if (!s_(t, t).is_monic()) scale_row(t, inverse(s_(t, t).lead()));
    }
  }

  Index rank() const { return rank_; }
  const Mat<Poly<F>>& s() const { return s_; }
  const Mat<Poly<F>>& a() const { return a_; }
  const Mat<Poly<F>>& b() const { return b_; }

 private:
  // Clears row t and column t outside the diagonal; false if the trailing block is zero.
  bool eliminate(Index t) {
    for (;;) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < s_.rows(); ++i) {
        for (Index j = t; j < s_.cols(); ++j) {
          if (s_(i, j).is_zero()) continue;
          if (pi < 0 || s_(i, j).degree() < s_(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (Index i = t + 1; i < s_.rows(); ++i) {
        if (s_(i, t).is_zero()) continue;
        auto [q, r] = divmod(s_(i, t), s_(t, t));
        row_axpy(i, t, q);
        clean = clean && r.is_zero();
      }
      for (Index j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j).is_zero()) continue;
        auto [q, r] = divmod(s_(t, j), s_(t, t));
        col_axpy(j, t, q);
        clean = clean && r.is_zero();
      }
      if (clean) return true;
    }
  }

  // diag(alpha, beta) -> diag(g, g alpha' beta') with unimodular 2x2 factors
  //   L = [[1, 1], [-b beta', 1 - b beta']],  R = [[a, -beta'], [b, alpha']]
  // where a alpha + b beta = g, alpha' = alpha/g, beta' = beta/g.
  void bezout_swap(Index i, Index j) {
    const Poly<F> alpha = s_(i, i), beta = s_(j, j);
    auto [g, a, b] = gcd_extended(alpha, beta);
    const Poly<F> ap = exact_div(alpha, g), bp = exact_div(beta, g);
    const Poly<F> one = Poly<F>::one(field_);
    const Poly<F> bbp = b * bp;
    apply_left(i, j, one, one, -bbp, one - bbp);
    apply_right(i, j, a, -bp, b, ap);
  }

  void repair_divisibility() {
    for (Index i = 0; i < rank_; ++i) {
      for (Index j = i + 1; j < rank_; ++j) {
        if (!divides(s_(i, i), s_(j, j))) bezout_swap(i, j);
      }
    }
  }

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    s_.row(i).swap(s_.row(j));
    if (track_) a_.row(i).swap(a_.row(j));
  }

  void swap_cols(Index i, Index j) {
    if (i == j) return;
    s_.col(i).swap(s_.col(j));
    if (track_) b_.col(i).swap(b_.col(j));
  }

  // row dst -= q * row src
  void row_axpy(Index dst, Index src, const Poly<F>& q) {
    for (Index c = 0; c < s_.cols(); ++c) {
      if (!s_(src, c).is_zero()) s_(dst, c) -= q * s_(src, c);
    }
    if (!track_) return;
    for (Index c = 0; c < a_.cols(); ++c) {
      if (!a_(src, c).is_zero()) a_(dst, c) -= q * a_(src, c);
    }
  }

  // col dst -= q * col src
  void col_axpy(Index dst, Index src, const Poly<F>& q) {
    for (Index r = 0; r < s_.rows(); ++r) {
      if (!s_(r, src).is_zero()) s_(r, dst) -= s_(r, src) * q;
    }
    if (!track_) return;
    for (Index r = 0; r < b_.rows(); ++r) {
      if (!b_(r, src).is_zero()) b_(r, dst) -= b_(r, src) * q;
    }
  }

  void scale_row(Index i, const F& c) {
    for (Index k = 0; k < s_.cols(); ++k) s_(i, k) *= c;
    if (!track_) return;
    for (Index k = 0; k < a_.cols(); ++k) a_(i, k) *= c;
  }

  static void mix_rows(Mat<Poly<F>>& m, Index i, Index j, const Poly<F>& l00, const Poly<F>& l01,
                       const Poly<F>& l10, const Poly<F>& l11) {
    for (Index c = 0; c < m.cols(); ++c) {
      Poly<F> x = m(i, c), y = m(j, c);
      m(i, c) = l00 * x + l01 * y;
      m(j, c) = l10 * x + l11 * y;
    }
  }

  static void mix_cols(Mat<Poly<F>>& m, Index i, Index j, const Poly<F>& r00, const Poly<F>& r01,
                       const Poly<F>& r10, const Poly<F>& r11) {
    for (Index r = 0; r < m.rows(); ++r) {
      Poly<F> x = m(r, i), y = m(r, j);
      m(r, i) = x * r00 + y * r10;
      m(r, j) = x * r01 + y * r11;
    }
  }

  void apply_left(Index i, Index j, const Poly<F>& l00, const Poly<F>& l01, const Poly<F>& l10,
                  const Poly<F>& l11) {
    mix_rows(s_, i, j, l00, l01, l10, l11);
    if (track_) mix_rows(a_, i, j, l00, l01, l10, l11);
  }

  void apply_right(Index i, Index j, const Poly<F>& r00, const Poly<F>& r01, const Poly<F>& r10,
                   const Poly<F>& r11) {
    mix_cols(s_, i, j, r00, r01, r10, r11);
    if (track_) mix_cols(b_, i, j, r00, r01, r10, r11);
  }

  FieldSpec field_;
  Mat<Poly<F>> s_, a_, b_;
  bool track_;
  Index rank_ = 0;
};

template <class F>
std::vector<Poly<F>> diagonal(const Mat<Poly<F>>& s, const FieldSpec& field) {
  std::vector<Poly<F>> d;
  for (Index t = 0; t < std::min(s.rows(), s.cols()); ++t) {
    d.push_back(s(t, t).is_zero() ? Poly<F>(field) : s(t, t));
  }
  return d;
}

}  // namespace

template <class F>
SmithDecomposition<F> smith_form(const PolyMatrix<F>& p) {
  Reducer<F> red(p, true);
  red.run();
  const FieldSpec& f = p.field();
  SmithDecomposition<F> out{PolyMatrix<F>(f, red.a()), PolyMatrix<F>(f, red.s()), PolyMatrix<F>(f, red.b()),
                            diagonal(red.s(), f)};
  if (!(multiply(multiply(out.A, p), out.B) == out.S)) throw InternalError("Smith form: A*P*B != S");
  return out;
}

template <class F>
std::vector<Poly<F>> invariant_polynomials(const PolyMatrix<F>& p) {
  Reducer<F> red(p, false);
  red.run();
  return diagonal(red.s(), p.field());
}

template <class F>
ElementaryDivisorList<F> elementary_divisors_finite(const std::vector<Poly<F>>& invariants) {
  ElementaryDivisorList<F> out;
  for (const auto& d : invariants) {
    if (d.degree() < 1) continue;
    for (const auto& f : factor_irreducible(d).factors) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const ElementaryDivisorGroup<F>& g) { return g.base.base() == f.base; });
      if (it == out.end()) {
        out.push_back({CharPoint<F>(f.base), {f.exponent}});
      } else {
        it->exponents.push_back(f.exponent);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return charpoint_less(a.base, b.base); });
  for (auto& g : out) std::sort(g.exponents.begin(), g.exponents.end());
  return out;
}

template <class F>
std::vector<int> infinite_valuations(const PolyMatrix<F>& p) {
  std::vector<int> v;
  for (const auto& d : invariant_polynomials(reversal_matrix(p))) {
    if (d.is_zero()) break;
    v.push_back(d.valuation());
  }
  return v;
}

template <class F>
std::vector<int> elementary_divisors_infinite(const PolyMatrix<F>& p) {
  std::vector<int> out;
  for (int e : infinite_valuations(p)) {
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
std::vector<int> infinite_structure_at_grade(const PolyMatrix<F>& p, int grade) {
  const int k = p.degree();
  if (grade < k) {
    throw InvalidArgument("grade " + std::to_string(grade) + " below matrix degree " + std::to_string(k));
  }
  std::vector<int> out;
  for (int e : infinite_valuations(p.with_grade(k))) {
    if (e + grade - k > 0) out.push_back(e + grade - k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

#define RATSUB_INSTANTIATE(F)                                                                         \
  template SmithDecomposition<F> smith_form(const PolyMatrix<F>&);                                    \
  template std::vector<Poly<F>> invariant_polynomials(const PolyMatrix<F>&);                          \
  template ElementaryDivisorList<F> elementary_divisors_finite(const std::vector<Poly<F>>&);          \
  template std::vector<int> infinite_valuations(const PolyMatrix<F>&);                                \
  template std::vector<int> elementary_divisors_infinite(const PolyMatrix<F>&);                       \
  template std::vector<int> infinite_structure_at_grade(const PolyMatrix<F>&, int);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
