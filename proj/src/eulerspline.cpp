#include "landau/eulerspline.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/exactnum.hpp"

namespace landau {

namespace {

void check_degree(int n, int min = 0) {
  if (n < min) throw DomainError("degree " + std::to_string(n) + " below " + std::to_string(min));
  if (n > kMaxSequenceIndex) throw IndexTooLarge("index too large: " + std::to_string(n));
}

// E_n in the variable y = x - 1/2, double coefficients; bounded terms on [0,1].
const PolyD& centered_piece(int n) {
  static std::mutex mu;
  static std::vector<PolyD> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(to_double(euler_poly(m).shifted(Rational(1, 2))));
  }
  return cache[n];
}

double log_rational(const Rational& r) {
  // numerator and denominator may exceed the double range separately
  auto lg = [](const BigInt& v) {
    const unsigned bits = static_cast<unsigned>(msb(v));
    if (bits < 1000) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 60;
    return std::log(BigInt(v >> shift).convert_to<double>()) + shift * std::log(2.0);
  };
  return lg(numerator(r)) - lg(denominator(r));
}

double eps(int n) { return n % 2 == 0 ? 0.5 : 0.0; }

struct DoubleConstants {
  double log_s;   // log s_n
  double s_root;  // s_n^{1/n}
  double e_eps;   // e_n(eps_n)
};

const DoubleConstants& constants(int n);

}  // namespace

Rational r_n(int n) {
  check_degree(n);
  const Rational sgn = (n / 2) % 2 == 0 ? 1 : -1;
  if (n % 2 == 0) return sgn * euler_number(n) / Rational(BigInt(1) << n);
  return sgn * Rational((BigInt(1) << (n + 2)) - 2) * bernoulli(n + 1) / Rational(n + 1);
}

Rational s_n(int n) { return r_n(n) / Rational(factorial(static_cast<unsigned>(n))); }

EulerSplineTable euler_spline_table(int n) {
  check_degree(n);
  EulerSplineTable t;
  t.n = n;
  t.piece = euler_poly(n);
  t.r_n = r_n(n);
  t.s_n = s_n(n);
  t.epsilon_n = n % 2 == 0 ? Rational(1, 2) : Rational(0);
  return t;
}

double e_n(int n, double x) {
  check_degree(n);
  const double fl = std::floor(x);
  const double fr = x - fl;
  const double sgn = std::fmod(std::abs(fl), 2.0) == 0.0 ? 1.0 : -1.0;
  if (n == 0) return fr == 0.0 ? 0.0 : sgn;
  return sgn * centered_piece(n).eval(fr - 0.5);
}

Rational e_n_exact(int n, const Rational& x) {
  check_degree(n);
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator(x), denominator(x), q, r);
  if (r < 0) q -= 1;  // floor
  const Rational fr = x - Rational(q);
  const Rational sgn = (q % 2 == 0) ? 1 : -1;
  if (n == 0) return fr == 0 ? Rational(0) : sgn;
  return sgn * euler_poly(n)(fr);
}

double e_n_deriv(int n, int k, double x) {
  check_degree(n);
  if (k < 0 || k > n) throw DomainError("derivative order out of range");
  double f = 1;
  for (int j = 0; j < k; ++j) f *= n - j;
  return f * e_n(n - k, x);
}

double euler_spline(int n, double x) {
  check_degree(n, 1);
  return e_n(n, x + eps(n)) / constants(n).e_eps;
}

double euler_spline_deriv(int n, int k, double x) {
  check_degree(n, 1);
  return e_n_deriv(n, k, x + eps(n)) / constants(n).e_eps;
}

namespace {

const DoubleConstants& constants(int n) {
  static std::mutex mu;
  static std::vector<DoubleConstants> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    DoubleConstants c;
    c.log_s = log_rational(s_n(m));
    c.s_root = m == 0 ? 1.0 : std::exp(c.log_s / m);
    Poly e = euler_poly(m);
    c.e_eps = to_double(e(m % 2 == 0 ? Rational(1, 2) : Rational(0)));
    cache.push_back(c);
  }
  return cache[n];
}

double s_root(int n) { return constants(n).s_root; }

}  // namespace

double q_n(int n, double x) {
  check_degree(n, 2);
  return euler_spline(n, x * s_root(n));
}

double q_n_deriv(int n, int k, double x) {
  check_degree(n, 2);
  const double c = s_root(n);
  return std::pow(c, k) * euler_spline_deriv(n, k, x * c);
}

double q_n_deriv_sup(int n, int k) {
  check_degree(n, 2);
  if (k < 0 || k > n) throw DomainError("derivative order out of range");
  const double lam = 1.0 - static_cast<double>(k) / n;
  return std::exp(constants(n - k).log_s - lam * constants(n).log_s);
}

double favard(int n) {
  check_degree(n);
  return std::exp(n * std::log(std::numbers::pi) + constants(n).log_s);
}

double favard_best_approx(int n, int m, double omega) {
  check_degree(n, 1);
  if (m < 1) throw DomainError("harmonic index must be >= 1");
  if (!(omega > 0)) throw DomainError("omega must be positive");
  return std::exp(n * std::log(omega / (2.0 * m)) + constants(n).log_s);
}

}  // namespace landau
