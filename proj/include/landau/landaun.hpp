#pragma once

#include <optional>

#include "landau/rational.hpp"

namespace landau {

// Sharp whole-line constant s_{n-k} / s_n^{1-k/n} times a^{1-k/n} b^{k/n}; 2 <= n <= 12.
double kolmogorov_bound(int n, int k, double a, double b);

enum class SatoRegime { Short, Long };

// Sharp sup ||f'|| and ||f''|| over L_3(a, b; [0, T]).
struct SatoResult {
  double T = 0;
  double T0 = 0;
  double alpha = 0;  // root of 12 - 24 alpha = (T^3 b / a) alpha^2 (1 - alpha)^2; 1/3 in the long regime
  double value_k1 = 0;
  double value_k2 = 0;
  SatoRegime regime = SatoRegime::Long;
  double value(int k) const { return k == 1 ? value_k1 : value_k2; }
};

SatoResult sato_segment(int k, double a, double b, double T);
// Limits of the segment values for T >= T0.
double sato_C31();
double sato_C32();

// T_{n-1}^{(k)}(1) by the closed form, 1 <= k <= n-1.
BigInt chebyshev_deriv_at_one(int n, int k);
// 2^k T_{n-1}^{(k)}(1), the optimal A_{n,k}.
BigInt A_nk_markov(int n, int k);
// Admissible B_{n,k} and the lower bound forced by T_n.
Rational B_nk_kallioniemi(int n, int k);
Rational B_nk_lower(int n, int k);
Rational B_nk_cartan(int n, int k);

// mu(lambda) = -int_0^lambda ln tan(pi t / 2) dt, 0 < lambda < 1.
double malliavin_mu(double lambda);

// Half-line constant C_{n,k} = sup ||f^{(k)}|| over L_n(1, 1; [0, inf)).
struct CnkBracket {
  int n = 0;
  int k = 0;
  double lower = 0;   // whole-line constant; restrictions of line members are half-line members
  double upper = 0;   // min of Matorin and Malliavin, or the exact value when known
  std::optional<double> exact;
  double matorin = 0;
  double malliavin = 0;
  // kappa^{-1} times the Stechkin lower bound, kappa unknown: never compared numerically
  double stechkin_shape = 0;
  bool stechkin_shape_only = true;
};

CnkBracket cnk_bracket(int n, int k);

}  // namespace landau
