#include "landau/peano.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

double fact(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// (d - s)^p / p! as a polynomial in s
template <class S>
BasicPoly<S> truncated_power(const S& d, int p) {
  std::vector<S> c(p + 1);
  S pf = S(1);
  for (int i = 2; i <= p; ++i) pf *= S(i);
  for (int j = 0; j <= p; ++j) {
    S v = S(1);
    for (int i = 0; i < p - j; ++i) v *= d;
    S binom = S(1);
    for (int i = 1; i <= j; ++i) binom = binom * S(p - j + i) / S(i);
    c[j] = (j % 2 ? S(-1) : S(1)) * binom * v / pf;
  }
  return BasicPoly<S>(std::move(c));
}

double integral_abs(const PolyD& p, double h) {
  const PolyD P = p.antiderivative();
  std::vector<double> pts{0.0};
  for (double r : real_roots(p, 0.0, h))
    if (r > 0 && r < h) pts.push_back(r);
  pts.push_back(h);
  double s = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) s += std::abs(P.eval(pts[i + 1]) - P.eval(pts[i]));
  return s;
}

}  // namespace

void validate(const LinearFunctional& L) {
  if (!(L.T > 0)) throw DomainError("functional: T must be positive");
  if (L.n < 1) throw DomainError("functional: n must be >= 1");
  for (const auto& t : L.terms) {
    if (t.alpha < 0 || t.alpha > L.T) throw DomainError("functional: alpha outside [0, T]");
    if (t.m < 0 || t.m > L.n - 1) throw DomainError("functional: derivative order outside 0..n-1");
  }
}

LinearFunctional derivative_functional(double x, double T) {
  if (!(T > 0) || x < 0 || x > T) throw DomainError("derivative functional needs 0 <= x <= T");
  return {{{x, 1, 1.0}, {T, 0, -1.0 / T}, {0.0, 0, 1.0 / T}}, T, 2};
}

bool annihilates_polys(const LinearFunctional& L) {
  validate(L);
  double mass = 0;
  for (const auto& t : L.terms) mass += std::abs(t.lambda);
  for (int j = 0; j < L.n; ++j) {
    double s = 0;
    for (const auto& t : L.terms) {
      if (t.m > j) continue;
      s += t.lambda * fact(j) / fact(j - t.m) * std::pow(t.alpha, j - t.m);
    }
    if (std::abs(s) > 1e-10 * mass * std::pow(L.T, j)) return false;
  }
  return true;
}

KernelValue peano_kernel(const LinearFunctional& L, double t) {
  validate(L);
  KernelValue kv{0.0, false};
  for (const auto& term : L.terms) {
    if (t > term.alpha) continue;
    const int p = L.n - 1 - term.m;
    if (p == 0 && t == term.alpha) kv.at_discontinuity = true;
    kv.value += term.lambda * std::pow(term.alpha - t, p) / fact(p);
  }
  return kv;
}

Spline kernel_pieces(const LinearFunctional& L) {
  validate(L);
  std::vector<double> bp{0.0, L.T};
  for (const auto& t : L.terms)
    if (t.alpha > 0 && t.alpha < L.T) bp.push_back(t.alpha);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  Spline K;
  K.knots = bp;
  K.n_smooth = 0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double u = bp[i], v = bp[i + 1];
    PolyD p;
    for (const auto& t : L.terms)
      if (t.alpha >= v) p += truncated_power(t.alpha - u, L.n - 1 - t.m) * t.lambda;
    K.pieces.push_back(p);
  }
  return K;
}

double kernel_l1_norm(const LinearFunctional& L) {
  const Spline K = kernel_pieces(L);
  double s = 0;
  for (std::size_t i = 0; i < K.size(); ++i) s += integral_abs(K.pieces[i], K.width(i));
  return s;
}

double derivative_functional_l1_norm(double x, double T) {
  if (!(T > 0) || x < 0 || x > T) throw DomainError("derivative functional needs 0 <= x <= T");
  return (x * x + (T - x) * (T - x)) / (2 * T);
}

double apply(const LinearFunctional& L, const Spline& f) {
  double s = 0;
  for (const auto& t : L.terms) s += t.lambda * eval(f, t.alpha, t.m);
  return s;
}

double landau_bound_n2(double a, double b, double T, double x) {
  if (!(T > 0)) throw DomainError("T must be positive");
  if (x < 0 || x > T) throw DomainError("x must lie in [0, T]");
  return 2 * a / T + b * (x * x + (T - x) * (T - x)) / (2 * T);
}

// ---------------------------------------------------------------- certificate

double KernelCertificate::C_star() const {
  const double lam = static_cast<double>(k) / n;
  return n * std::pow(A_star(), 1 - lam) * std::pow(B_star(), lam);
}

double KernelCertificate::T0(double a, double b) const {
  return std::pow(A_star() * a / (B_star() * b), 1.0 / n);
}

double KernelCertificate::raw_bound(double a, double b, double T) const {
  return A * a * std::pow(T, -k) + B * b * std::pow(T, n - k);
}

double KernelCertificate::bound(double a, double b, double T) const {
  if (!(T > 0) || !(a > 0) || !(b > 0)) throw DomainError("certificate bound needs a, b, T > 0");
  if (T <= T0(a, b)) return raw_bound(a, b, T);
  const double lam = static_cast<double>(k) / n;
  return C_star() * std::pow(a, 1 - lam) * std::pow(b, lam);
}

std::vector<Poly> vandermonde_weights(int n, int k) {
  if (n < 2 || n > 12) throw Unsupported("Vandermonde certificate supports 2 <= n <= 12");
  if (k <= 0 || k >= n) throw DomainError("certificate needs 0 < k < n");
  // V[j][i] = alpha_i^j, alpha_i = i/n
  std::vector<std::vector<Rational>> V(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) V[j][i] = pow_rational(Rational(i + 1, n), j);
  // columns of V^{-1}
  std::vector<std::vector<Rational>> W(n);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    W[j] = *solve_linear(V, e);  // W[j][i] = (V^{-1})_{ij}
  }
  // rhs_j(x) = D^k x^j
  std::vector<Poly> lam(n);
  for (int j = k; j < n; ++j) {
    Rational c = 1;
    for (int i = 0; i < k; ++i) c *= j - i;
    for (int i = 0; i < n; ++i) lam[i] += Poly::monomial(j - k, c * W[j][i]);
  }
  return lam;
}

namespace {

double sup_weight_sum(const std::vector<Poly>& lam) {
  std::vector<PolyD> ld;
  for (const auto& p : lam) ld.push_back(to_double(p));
  std::vector<double> bp{0.0, 1.0};
  for (const auto& p : ld)
    for (double r : real_roots(p, 0.0, 1.0)) bp.push_back(r);
  std::sort(bp.begin(), bp.end());
  double best = 0;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const double lo = bp[s], hi = bp[s + 1];
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi);
    PolyD P;
    for (const auto& p : ld) P += p * (p.eval(mid) < 0 ? -1.0 : 1.0);
    best = std::max(best, max_abs_on(P, lo, hi));
  }
  return best;
}

// max over t in [0,1] of |K_x(t)| for L_x f = f^{(k)}(x) - sum lambda_i(x) f(alpha_i)
double kernel_sup_at(int n, int k, const std::vector<Poly>& lam, const Rational& x) {
  std::vector<Rational> alpha, weight;
  std::vector<int> power;
  for (int i = 0; i < n; ++i) {
    alpha.push_back(Rational(i + 1, n));
    weight.push_back(-lam[i](x));
    power.push_back(n - 1);
  }
  alpha.push_back(x);
  weight.push_back(1);
  power.push_back(n - 1 - k);
  std::vector<Rational> bp = alpha;
  bp.push_back(0);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  double best = 0;
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const Rational u = bp[s], v = bp[s + 1];
    Poly p;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] >= v) p += truncated_power<Rational>(alpha[i] - u, power[i]) * weight[i];
    best = std::max(best, max_abs_on(to_double(p), 0.0, to_double(v - u)));
  }
  return best;
}

}  // namespace

KernelCertificate vandermonde_certificate(int n, int k, int grid_size, Exec exec) {
  if (grid_size < 2) throw DomainError("certificate grid needs at least two points");
  const std::vector<Poly> lam = vandermonde_weights(n, k);
  KernelCertificate c;
  c.n = n;
  c.k = k;
  c.grid_size = grid_size;
  c.A = sup_weight_sum(lam);
  std::vector<double> sup(grid_size);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < grid_size; ++j) sup[j] = kernel_sup_at(n, k, lam, Rational(j, grid_size - 1));
  } else {
    for (int j = 0; j < grid_size; ++j) sup[j] = kernel_sup_at(n, k, lam, Rational(j, grid_size - 1));
  }
  c.B = *std::max_element(sup.begin(), sup.end());
  return c;
}

}  // namespace landau
