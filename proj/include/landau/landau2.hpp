#pragma once

#include <optional>
#include <utility>

#include "landau/bound.hpp"
#include "landau/pwpoly.hpp"

namespace landau {

// phi(x) = sqrt(2x^2 + 4) - x, minimum sqrt(2) at x = sqrt(2).
double phi(double x);
// G(x, y) = 2/(x+y) + (x^2+y^2)/(2(x+y)); bound on f'(t0) from a window [t0-x, t0+y].
double G(double x, double y);

// sup ||f'|| over L_2(a, b; domain). Exact with an attached witness.
BoundResult sigma_inf(double a, double b, double T);
BoundResult sigma_inf_half_line(double a, double b);
BoundResult sigma_inf_line(double a, double b);

struct PointwiseQuery {
  double t0;
  double T;
  double a = 1;
  double b = 1;
};

// sup |f'(t0)| over L_2(a, b; [0, T]), three branches after reflection t0 -> T - t0.
BoundResult sigma_pointwise(const PointwiseQuery& q);

// Comparison function: even, antiperiod 2 sqrt(2), equal to 1 - t^2/2 on |t| <= sqrt(2).
std::pair<double, double> q_eval(double t);
// q restricted to [lo, hi] as a spline, knots at the odd multiples of sqrt(2).
Spline q_spline(double lo, double hi);

// sqrt(2 (1 - |v|)), the speed bound on the whole line at height v.
double pointwise_speed_bound(double f_val);

// Endpoint test for extension to a member of L_2(1, 1; R). Throws NotAMember.
bool extendable_to_line(const Spline& f);
// Extension by parabolic landings and constants, one unit of padding on each side.
// Throws Refusal when the endpoint test fails.
Spline extend_to_line(const Spline& f);

// (1 - eps) f followed by an affine-plus-quadratic tail of length h, in L_2(T + h).
Spline prolong_affine(const Spline& f, double h, double eps, double theta);
// Inserts a bump of width h at a critical point t0 with f(t0) < 1; the total
// variation grows by h^2 / 8.
Spline insert_bump(const Spline& f, double t0, double h);

enum class Sigma1Rule { Short, Parabola, Lattice, Bracket, Subadditive };
const char* sigma1_rule_name(Sigma1Rule r);

// sup of the total variation over L_2(a, b; [0, T]).
struct Sigma1Result {
  double lower = 0;
  double upper = 0;
  std::optional<double> exact;
  Sigma1Rule provenance = Sigma1Rule::Short;
  std::optional<Spline> witness;
};

Sigma1Result sigma1(double a, double b, double T);

// Lattice extremal on [0, 2N sqrt(2) + 4] with total variation 2N + 4.
Spline lattice_witness(int N);

}  // namespace landau
