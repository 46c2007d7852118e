#pragma once

#include "landau/poly.hpp"
#include "landau/rational.hpp"

namespace landau {

// Largest index accepted by the sequence functions below.
inline constexpr int kMaxSequenceIndex = 64;

// B_m with B_1 = -1/2.
Rational bernoulli(int m);
// Euler numbers E_m (E_0 = 1, E_2 = -1, E_4 = 5, ...); zero for odd m.
Rational euler_number(int m);
// Euler polynomial E_m(x): E_m' = m E_{m-1}, E_m(0) + E_m(1) = 2 [m = 0].
Poly euler_poly(int m);
// E_m(0) = B_{m+1} (2 - 2^{m+2}) / (m+1).
Rational euler_poly_at_zero(int m);

}  // namespace landau
