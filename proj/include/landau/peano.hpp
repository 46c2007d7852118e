#pragma once

#include <utility>
#include <vector>

#include "landau/parallel.hpp"
#include "landau/poly.hpp"
#include "landau/pwpoly.hpp"

namespace landau {

// L(f) = sum lambda * f^{(m)}(alpha) on [0, T], kernel order n.
struct FunctionalTerm {
  double alpha;
  int m;
  double lambda;
};

struct LinearFunctional {
  std::vector<FunctionalTerm> terms;
  double T = 1;
  int n = 2;
};

void validate(const LinearFunctional& L);

// f'(x) - (f(T) - f(0))/T with n = 2
LinearFunctional derivative_functional(double x, double T);

// L(x^j) = 0 for j < n, relative to sum |lambda| T^j.
bool annihilates_polys(const LinearFunctional& L);

struct KernelValue {
  double value;
  bool at_discontinuity;  // t sits on an alpha carrying m = n-1; value is the left limit
};

// K(t) = sum lambda (alpha - t)^{n-1-m}/(n-1-m)! [t <= alpha]
KernelValue peano_kernel(const LinearFunctional& L, double t);

// K as a piecewise polynomial on [0, T] (breakpoints at the alphas).
Spline kernel_pieces(const LinearFunctional& L);

double kernel_l1_norm(const LinearFunctional& L);
// closed form for derivative_functional(x, T): (x^2 + (T-x)^2) / (2T)
double derivative_functional_l1_norm(double x, double T);

// Applies L to a spline defined on a domain containing [0, T].
double apply(const LinearFunctional& L, const Spline& f);

// 2a/T + b (x^2 + (T-x)^2) / (2T)
double landau_bound_n2(double a, double b, double T, double x);

struct KernelCertificate {
  int n = 0, k = 0;
  int grid_size = 0;
  double A = 0;  // sup over x in [0,1] of sum |lambda_i(x)|
  double B = 0;  // sup over grid x, exact per-interval sup over t, of |K_x(t)|

  double A_star() const { return A / (n - k); }
  double B_star() const { return B / k; }
  double C_star() const;
  double T0(double a, double b) const;
  // A a T^{-k} + B b T^{n-k}
  double raw_bound(double a, double b, double T) const;
  // raw_bound below T0, C* a^{1-k/n} b^{k/n} above
  double bound(double a, double b, double T) const;
};

// alpha_i = i/n; lambda(x) from the exact Vandermonde system.
KernelCertificate vandermonde_certificate(int n, int k, int grid_size = 201,
                                          Exec exec = Exec::Parallel);

// lambda_i(x) as exact polynomials in x, for alpha_i = i/n.
std::vector<Poly> vandermonde_weights(int n, int k);

}  // namespace landau
