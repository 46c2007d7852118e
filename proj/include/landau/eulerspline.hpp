#pragma once

#include "landau/poly.hpp"
#include "landau/rational.hpp"

namespace landau {

struct EulerSplineTable {
  int n = 0;
  Poly piece;          // e_n on [0,1), equal to E_n
  Rational r_n;        // sup |e_n|
  Rational s_n;        // r_n / n!
  Rational epsilon_n;  // 1/2 for even n, 0 for odd n
};

EulerSplineTable euler_spline_table(int n);

Rational r_n(int n);
Rational s_n(int n);

// 2-periodic, 1-antiperiodic spline built from E_n. e_0 vanishes at integers.
double e_n(int n, double x);
Rational e_n_exact(int n, const Rational& x);
// k-th derivative: n!/(n-k)! e_{n-k}
double e_n_deriv(int n, int k, double x);

// Normalized Euler spline: e_n(x + eps_n) / e_n(eps_n).
double euler_spline(int n, double x);
double euler_spline_deriv(int n, int k, double x);

// q_n(x) = euler_spline(n, x s_n^{1/n}); member of the unit class on the whole line.
double q_n(int n, double x);
double q_n_deriv(int n, int k, double x);
// sup |q_n^{(k)}| = s_{n-k} / s_n^{1-k/n}
double q_n_deriv_sup(int n, int k);

// K_n = pi^n s_n
double favard(int n);

// (omega/2)^n r_n / (m^n n!)
double favard_best_approx(int n, int m, double omega);

}  // namespace landau
