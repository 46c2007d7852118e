#include "landau/landaun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "landau/errors.hpp"
#include "landau/eulerspline.hpp"

namespace landau {

namespace {

const double kPi = std::acos(-1.0);

// s_{n-k} / s_n^{1-k/n} without the range gate of the public entry point.
double kolmogorov_unit(int n, int k) {
  const double lam = static_cast<double>(k) / n;
  const double sn = to_double(s_n(n)), snk = to_double(s_n(n - k));
  return snk / std::pow(sn, 1 - lam);
}

void check_nk(int n, int k) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (k < 1 || k > n - 1) throw DomainError("k must satisfy 1 <= k <= n-1");
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15 * tol) return left + right + diff / 15;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

}  // namespace

double kolmogorov_bound(int n, int k, double a, double b) {
  if (n < 2 || n > 12) throw Unsupported("kolmogorov_bound supports 2 <= n <= 12");
  if (k < 0 || k > n) throw DomainError("k must satisfy 0 <= k <= n");
  if (!(a > 0) || !(b > 0)) throw DomainError("a and b must be positive");
  const double lam = static_cast<double>(k) / n;
  return kolmogorov_unit(n, k) * std::pow(a, 1 - lam) * std::pow(b, lam);
}

double sato_C31() { return std::pow(3.0, 5.0 / 3) / 2; }
double sato_C32() { return 2 * std::cbrt(3.0); }

SatoResult sato_segment(int k, double a, double b, double T) {
  if (k != 1 && k != 2) throw DomainError("sato_segment needs k in {1, 2}");
  if (!(a > 0) || !(b > 0) || !(T > 0)) throw DomainError("a, b, T must be positive");
  SatoResult r;
  r.T = T;
  r.T0 = std::cbrt(81 * a / b);
  if (T >= r.T0) {
    r.regime = SatoRegime::Long;
    r.alpha = 1.0 / 3;
    r.value_k1 = sato_C31() * std::pow(a, 2.0 / 3) * std::cbrt(b);
    r.value_k2 = sato_C32() * std::cbrt(a) * std::pow(b, 2.0 / 3);
    return r;
  }
  r.regime = SatoRegime::Short;
  const double K = T * T * T * b / a;
  // 12 - 24 x decreases and K x^2 (1-x)^2 increases on [1/3, 1/2]
  auto F = [K](double x) { return 12 - 24 * x - K * x * x * (1 - x) * (1 - x); };
  double lo = 1.0 / 3, hi = 0.5;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (F(mid) > 0 ? lo : hi) = mid;
  }
  r.alpha = 0.5 * (lo + hi);
  const double aT = r.alpha * T;
  r.value_k1 = 4 * a / aT + b * aT * aT / 6;
  r.value_k2 = 4 * a / (aT * aT) + 2 * b * aT / 3;
  return r;
}

BigInt chebyshev_deriv_at_one(int n, int k) {
  check_nk(n, k);
  // (n-1) 2^k k! / (2k)! * (n+k-2)! / (n-k-1)!
  Rational v = Rational(n - 1) * pow_rational(Rational(2), k) * Rational(factorial(k)) /
               Rational(factorial(2 * k)) * Rational(factorial(n + k - 2)) /
               Rational(factorial(n - k - 1));
  if (denominator(v) != 1) throw std::logic_error("Chebyshev derivative is not an integer");
  return numerator(v);
}

BigInt A_nk_markov(int n, int k) {
  return chebyshev_deriv_at_one(n, k) * (BigInt(1) << k);
}

Rational B_nk_kallioniemi(int n, int k) {
  check_nk(n, k);
  const Rational num = Rational(k) * (2 * (n - 1) * (n - 1) + k - 1);
  const Rational den = Rational(n - k) * (n - 1) * (n + k - 2) * Rational(factorial(n)) *
                       pow_rational(Rational(2), 2 * n - 2);
  return Rational(A_nk_markov(n, k)) * num / den;
}

Rational B_nk_lower(int n, int k) {
  check_nk(n, k);
  const Rational num = Rational(k) * (2 * n - 1);
  const Rational den = Rational(n - k) * (n - 1) * Rational(factorial(n)) *
                       pow_rational(Rational(2), 2 * n - 1);
  return Rational(A_nk_markov(n, k)) * num / den;
}

Rational B_nk_cartan(int n, int k) {
  check_nk(n, k);
  return Rational(A_nk_markov(n, k)) / Rational(factorial(n));
}

double malliavin_mu(double lambda) {
  if (!(lambda > 0 && lambda < 1)) throw DomainError("mu needs 0 < lambda < 1");
  // ln tan(pi t/2) = ln(pi t/2) + ln(tan(pi t/2) / (pi t/2)); the first part integrates in closed form
  const double x = kPi * lambda / 2;
  const double singular = lambda * (std::log(x) - 1);
  auto smooth = [](double t) {
    if (t == 0) return 0.0;
    const double u = kPi * t / 2;
    return std::log(std::tan(u) / u);
  };
  return -(singular + adaptive_simpson(smooth, 0, lambda, 1e-13));
}

CnkBracket cnk_bracket(int n, int k) {
  if (n < 2 || n > 30) throw Unsupported("cnk_bracket supports 2 <= n <= 30");
  if (k < 1 || k > n - 1) throw DomainError("k must satisfy 1 <= k <= n-1");
  CnkBracket c;
  c.n = n;
  c.k = k;
  const double lam = static_cast<double>(k) / n;
  // T_n^{(k)}(1) / T_n^{(n)}(1)^{k/n}
  c.matorin = to_double(Rational(chebyshev_deriv_at_one(n + 1, k))) /
              std::pow(to_double(Rational(chebyshev_deriv_at_one(n + 1, n))), lam);
  c.malliavin = 1024 * std::exp(1.0) * std::log(static_cast<double>(n)) / kPi * std::exp(n * malliavin_mu(lam));
  c.upper = std::min(c.matorin, c.malliavin);
  c.lower = kolmogorov_unit(n, k);
  const int p = std::min(k, n - k);
  c.stechkin_shape = std::pow(p, -0.5) * std::pow(static_cast<double>(n) / p, p);
  if (n == 2) c.exact = 2.0;
  if (n == 3) c.exact = k == 1 ? sato_C31() : sato_C32();
  if (c.exact) c.upper = *c.exact;
  return c;
}

}  // namespace landau
