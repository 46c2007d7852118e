#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "landau/rational.hpp"

namespace landau {

// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
// The zero polynomial has no coefficients and degree -1.
template <class S>
class BasicPoly {
 public:
  BasicPoly() = default;
  explicit BasicPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static BasicPoly constant(const S& v) { return BasicPoly(std::vector<S>{v}); }
  static BasicPoly monomial(std::size_t deg, const S& v) {
    std::vector<S> c(deg + 1, S(0));
    c[deg] = v;
    return BasicPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  S leading() const { return c_.empty() ? S(0) : c_.back(); }

  // Horner evaluation; X must accept multiplication by S.
  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }
  S operator()(const S& x) const { return eval<S>(x); }

  BasicPoly derivative(int k = 1) const {
    if (k <= 0) return *this;
    if (degree() < k) return {};
    std::vector<S> d(c_.size() - k);
    for (std::size_t i = k; i < c_.size(); ++i) {
      S f = S(1);
      for (int j = 0; j < k; ++j) f *= S(static_cast<long long>(i - j));
      d[i - k] = c_[i] * f;
    }
    return BasicPoly(std::move(d));
  }

  // Antiderivative vanishing at 0.
  BasicPoly antiderivative() const {
    if (c_.empty()) return {};
    std::vector<S> a(c_.size() + 1, S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / S(static_cast<long long>(i + 1));
    return BasicPoly(std::move(a));
  }

  // q(x) = p(x + s)
  BasicPoly shifted(const S& s) const {
    std::vector<S> a = c_;
    const std::size_t n = a.size();
    // repeated synthetic division (Taylor shift)
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += s * a[j];
    return BasicPoly(std::move(a));
  }

  // q(x) = p(lambda * x)
  BasicPoly scaled_argument(const S& lambda) const {
    std::vector<S> a = c_;
    S f = S(1);
    for (auto& v : a) {
      v *= f;
      f *= lambda;
    }
    return BasicPoly(std::move(a));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const S& v) {
    for (auto& x : c_) x *= v;
    trim();
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(BasicPoly a, const S& v) { return a *= v; }
  friend BasicPoly operator*(const S& v, BasicPoly a) { return a *= v; }
  friend BasicPoly operator-(BasicPoly a) { return a *= S(-1); }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return BasicPoly(std::move(r));
  }
  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using Poly = BasicPoly<Rational>;
using PolyD = BasicPoly<double>;

inline PolyD to_double(const Poly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return PolyD(std::move(c));
}

inline double eval_double(const Poly& p, double x) { return to_double(p).eval(x); }

// Exact algebra over the rationals.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
Poly monic(const Poly& p);
Poly gcd(Poly a, Poly b);
// Square-free part p / gcd(p, p').
Poly squarefree_part(const Poly& p);
// Yun decomposition: result[i] holds the factor of multiplicity i+1.
std::vector<Poly> yun(const Poly& p);
std::vector<Poly> sturm_sequence(const Poly& p);
// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_roots(const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi);
int count_roots(const Poly& p, const Rational& lo, const Rational& hi);
// Disjoint isolating intervals (lo, hi] for the distinct roots of p in (lo, hi],
// each refined to width <= width.
std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p, const Rational& lo,
                                                         const Rational& hi,
                                                         const Rational& width);
// True iff p >= 0 on [lo, hi] (exact).
bool nonnegative_on(const Poly& p, const Rational& lo, const Rational& hi);

// Solves A x = b by fraction-exact Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b);

// Numerical real roots of p in [lo, hi] by derivative cascade and bisection.
// Multiple roots are reported once. Zero polynomial yields no roots.
std::vector<double> real_roots(const PolyD& p, double lo, double hi);
// Max of |p| on [lo, hi] from endpoint and critical point candidates.
double max_abs_on(const PolyD& p, double lo, double hi);

}  // namespace landau
