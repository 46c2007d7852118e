#pragma once
// Shared generators and independent oracles for the test binaries.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "landau/peano.hpp"
#include "landau/pwpoly.hpp"

namespace testsupport {

using namespace landau;

// Random functional on [0, T] with n + extra terms that annihilates degree < n,
// solved exactly over the rationals. alpha on a 1/16 grid.
inline LinearFunctional random_annihilating(std::mt19937_64& rng, int n, int T16) {
  std::uniform_int_distribution<int> apos(0, T16), mdist(0, n - 1), extra_d(1, 2), lam(-9, 9);
  while (true) {
    const int extra = extra_d(rng);
    const int r = n + extra;
    std::vector<Rational> alpha;
    std::vector<int> m;
    for (int i = 0; i < r; ++i) {
      alpha.push_back(Rational(apos(rng), 16));
      m.push_back(mdist(rng));
    }
    std::vector<Rational> lambda(r, Rational(0));
    for (int i = 0; i < extra; ++i) lambda[i] = Rational(lam(rng), 4);
    if (std::all_of(lambda.begin(), lambda.begin() + extra, [](const Rational& v) { return v == 0; }))
      continue;
    // rows j < n: sum_i lambda_i D^{m_i} x^j (alpha_i) = 0
    auto moment = [&](int i, int j) {
      if (m[i] > j) return Rational(0);
      Rational c = 1;
      for (int s = 0; s < m[i]; ++s) c *= j - s;
      return c * pow_rational(alpha[i], j - m[i]);
    };
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n, Rational(0));
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) A[j][i] = moment(extra + i, j);
      for (int i = 0; i < extra; ++i) rhs[j] -= lambda[i] * moment(i, j);
    }
    auto sol = solve_linear(A, rhs);
    if (!sol) continue;
    LinearFunctional L;
    L.n = n;
    L.T = T16 / 16.0;
    for (int i = 0; i < r; ++i) {
      const Rational l = i < extra ? lambda[i] : (*sol)[i - extra];
      L.terms.push_back({to_double(alpha[i]), m[i], to_double(l)});
    }
    return L;
  }
}

// Random spline of class n on [0, T], rational data on a 1/16 grid.
inline ExactSpline random_rational_spline(std::mt19937_64& rng, int n, int T16) {
  std::uniform_int_distribution<int> cut(1, T16 - 1), num(-12, 12), pieces(1, 5);
  std::vector<int> cuts{0, T16};
  const int m = pieces(rng);
  for (int i = 1; i < m; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> knots, init, nth;
  for (int c : cuts) knots.push_back(Rational(c, 16));
  for (int j = 0; j < n; ++j) init.push_back(Rational(num(rng), 8));
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) nth.push_back(Rational(num(rng), 4));
  return spline_from_nth_derivative(knots, init, nth);
}

// Integral of K * f^{(n)} over [0, T] on the common refinement, exact per piece.
inline double kernel_integral(const LinearFunctional& L, const Spline& f) {
  const Spline K = kernel_pieces(L);
  std::vector<double> bp = K.knots;
  for (double k : f.knots)
    if (k > 0 && k < L.T) bp.push_back(k);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  double s = 0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double u = bp[i], v = bp[i + 1], mid = 0.5 * (u + v);
    const std::size_t kp = locate(K, mid);
    const PolyD P = K.pieces[kp].antiderivative();
    const double fn = eval(f, mid, L.n);
    s += fn * (P.eval(v - K.knots[kp]) - P.eval(u - K.knots[kp]));
  }
  return s;
}

// Scale for relative comparisons of L(f).
inline double functional_scale(const LinearFunctional& L, const Spline& f) {
  double s = 0;
  for (const auto& t : L.terms) s += std::abs(t.lambda * eval(f, t.alpha, t.m));
  return std::max(s, 1e-300);
}

}  // namespace testsupport
