#pragma once

#include <cstdint>
#include <vector>

#include "landau/parallel.hpp"
#include "landau/pwpoly.hpp"

namespace landau {

// maximize c.x subject to A x <= rhs, x >= 0, with rhs >= 0 (the origin is feasible).
struct DenseLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> A;  // row-major rows x cols
  std::vector<double> rhs;
  std::vector<double> c;
};

struct LpSolution {
  double value = 0;
  std::vector<double> x;
  int iterations = 0;
  int bland_iterations = 0;  // pivots taken under the anti-cycling rule
};

// Tableau simplex: Dantzig pricing, switching to Bland's rule after a run of
// degenerate pivots. Throws SolverFailure on the iteration cap or unboundedness.
// Serial and parallel execution give bit-identical results.
LpSolution solve_lp(const DenseLp& lp, Exec exec = Exec::Parallel, int max_iterations = 0);

struct PointwiseLp {
  double value = 0;
  int M = 0;
  double h = 0;
  int j = 0;  // grid index of the snapped t0
  int iterations = 0;
  std::vector<double> v;  // optimal grid values
};

// Discretized sup f'(t0) over L_2(a, b; [0, T]): grid values v_0..v_M with |v_i| <= a and
// |v_{i+1} - 2 v_i + v_{i-1}| <= b h^2. Central difference inside, one-sided
// second-order stencil at the ends. t0 snaps to the nearest grid point.
PointwiseLp lp_max_pointwise_derivative(double a, double b, double T, double t0, int M,
                                        Exec exec = Exec::Parallel);

// Piecewise-constant f'' = +-b with the sign flipping at each switch.
struct BangBangControl {
  double T = 0;
  double a = 1, b = 1;
  double f0 = 0, fp0 = 0;
  int initial_sign = 1;
  std::vector<double> switches;  // increasing, inside (0, T)
  double scale = 1;              // whole function multiplied by scale <= 1 to respect |f| <= a
};

Spline control_to_spline(const BangBangControl& u);
// Exact total variation and sup |f| of the unscaled control trajectory.
double control_total_variation(const BangBangControl& u);
double control_sup_abs(const BangBangControl& u);

struct BangBangSearch {
  double value = 0;  // total variation of a verified member: a lower bound on sigma_1
  BangBangControl control;
  int evaluations = 0;
};

// Nelder-Mead over (f0, f'0, gaps) with coordinate polishing. Trajectories leaving
// |f| <= a are shrunk by a / sup|f|, so every candidate is a genuine member.
// Restarts are seeded from `seed` and run concurrently; the best is chosen deterministically.
BangBangSearch bangbang_sigma1_search(double a, double b, double T, int max_switches, int restarts,
                                      std::uint64_t seed, Exec exec = Exec::Parallel);

// Random member of L_2(a, b; [0, T]): random switch times and signs of f'' = +-b, random
// initial data, parabolic landings at the wall, then a final shrink if |f| still exceeds a.
Spline random_member(double a, double b, double T, std::uint64_t seed);

}  // namespace landau
