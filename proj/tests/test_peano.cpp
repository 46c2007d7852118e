#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "landau/errors.hpp"
#include "landau/peano.hpp"
#include "support.hpp"

using namespace landau;

TEST_CASE("annihilation examples") {
  CHECK(annihilates_polys(derivative_functional(0.3, 2.0)));
  LinearFunctional point{{{0.0, 0, 1.0}}, 1.0, 1};
  CHECK_FALSE(annihilates_polys(point));
  LinearFunctional second{{{1.0, 0, 1.0}, {0.5, 0, -2.0}, {0.0, 0, 1.0}}, 1.0, 2};
  CHECK(annihilates_polys(second));
  second.n = 3;
  CHECK(annihilates_polys(second) == false);  // misses x^2
  CHECK_THROWS_AS(annihilates_polys({{{2.0, 0, 1.0}}, 1.0, 2}), DomainError);
}

TEST_CASE("derivative functional kernel") {
  auto L = derivative_functional(0.5, 1.0);
  CHECK(peano_kernel(L, 0.25).value == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(peano_kernel(L, 0.75).value == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(peano_kernel(L, 0.5).at_discontinuity);
  CHECK_FALSE(peano_kernel(L, 0.25).at_discontinuity);
  CHECK(peano_kernel(L, 1.5).value == 0);
  // both branches t/T and (t-T)/T everywhere
  for (int i = 1; i < 100; ++i) {
    const double T = 2.5, x = 1.1, t = T * i / 100.0;
    if (t == x) continue;
    const double expect = t < x ? t / T : (t - T) / T;
    CHECK(peano_kernel(derivative_functional(x, T), t).value == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("kernel l1 norm") {
  CHECK(kernel_l1_norm(derivative_functional(0, 2)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(derivative_functional_l1_norm(0, 2) == 1.0);
  CHECK(kernel_l1_norm(derivative_functional(1, 2)) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(derivative_functional_l1_norm(1, 2) == 0.5);
  for (int i = 0; i <= 20; ++i) {
    const double T = 3.0, x = T * i / 20;
    CHECK(kernel_l1_norm(derivative_functional(x, T)) ==
          doctest::Approx(derivative_functional_l1_norm(x, T)).epsilon(1e-13));
  }
  // generic L against a ~1e5-point midpoint Riemann sum; cells aligned with the 1/16 grid of alphas
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int T16 = 24 + trial;
    auto L = testsupport::random_annihilating(rng, 2 + trial % 3, T16);
    const int N = T16 * ((100000 + T16 - 1) / T16);
    double riemann = 0;
    for (int i = 0; i < N; ++i) riemann += std::abs(peano_kernel(L, L.T * (i + 0.5) / N).value);
    riemann *= L.T / N;
    CHECK(std::abs(riemann - kernel_l1_norm(L)) <= 1e-6 * std::max(1.0, riemann));
  }
}

TEST_CASE("n = 2 pointwise bound") {
  CHECK(landau_bound_n2(1, 1, 2, 0) == doctest::Approx(2.0));
  CHECK(landau_bound_n2(1, 1, 2, 1) == doctest::Approx(1.5));
  CHECK(landau_bound_n2(4, 1, 2, 0) == doctest::Approx(5.0));
  // equals 2a/T + b * l1 norm of the derivative kernel
  for (double x : {0.0, 0.3, 1.7}) CHECK(landau_bound_n2(1, 2, 2, x) == doctest::Approx(1 + 2 * derivative_functional_l1_norm(x, 2)));
}

TEST_CASE("representation identity L(f) = int K f^(n)") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3, T16 = 16 + static_cast<int>(rng() % 32);
    auto L = testsupport::random_annihilating(rng, n, T16);
    REQUIRE(annihilates_polys(L));
    auto f = to_numeric(testsupport::random_rational_spline(rng, n, T16));
    const double lhs = apply(L, f), rhs = testsupport::kernel_integral(L, f);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * testsupport::functional_scale(L, f));
  }
}

TEST_CASE("kernel magnitude bound") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    auto L = testsupport::random_annihilating(rng, n, 20 + trial);
    double cap = 0;
    for (const auto& t : L.terms) {
      const int p = n - 1 - t.m;
      cap += std::abs(t.lambda) * std::pow(L.T, p) / std::tgamma(p + 1.0);
    }
    for (int i = 0; i <= 400; ++i) CHECK(std::abs(peano_kernel(L, L.T * i / 400).value) <= cap * (1 + 1e-12));
  }
}

TEST_CASE("vandermonde certificate") {
  auto c21 = vandermonde_certificate(2, 1);
  CHECK(c21.A >= 2.0);
  CHECK(c21.A == doctest::Approx(4.0).epsilon(1e-14));  // lambda = (-2, 2)
  CHECK(c21.bound(1, 1, 2) >= 2.0);
  auto w = vandermonde_weights(2, 1);
  CHECK(w[0] == Poly{Rational(-2)});
  CHECK(w[1] == Poly{Rational(2)});

  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      auto c = vandermonde_certificate(n, k, 201);
      CHECK(c.A > 0);
      CHECK(c.B > 0);
      for (double a : {1.0, 3.0})
        for (double b : {1.0, 0.5}) {
          const double T0 = c.T0(a, b);
          const double lam = double(k) / n;
          const double opt = c.C_star() * std::pow(a, 1 - lam) * std::pow(b, lam);
          CHECK(c.raw_bound(a, b, T0) == doctest::Approx(opt).epsilon(1e-12));
          // T0 minimizes the raw bound
          CHECK(c.raw_bound(a, b, T0 * 1.01) >= opt);
          CHECK(c.raw_bound(a, b, T0 * 0.99) >= opt);
          // scaling (a, b, T) -> (mu a, mu lambda^n b, T / lambda) leaves the optimum invariant up to mu lambda^k
          const double mu = 2.5, sc = 1.7;
          const double scaled = c.C_star() * std::pow(mu * a, 1 - lam) * std::pow(mu * std::pow(sc, n) * b, lam);
          CHECK(scaled == doctest::Approx(mu * std::pow(sc, k) * opt).epsilon(1e-12));
        }
    }
  auto c31 = vandermonde_certificate(3, 1);
  CHECK(c31.bound(1, 1, 100) > std::cbrt(9.0 / 8));
  CHECK_THROWS_AS(vandermonde_certificate(13, 2), Unsupported);
  CHECK_THROWS_AS(vandermonde_certificate(1, 1), Unsupported);
}

TEST_CASE("certificate serial and parallel kernels agree bitwise") {
  for (auto [n, k] : {std::pair{3, 1}, std::pair{5, 2}, std::pair{8, 3}}) {
    auto s = vandermonde_certificate(n, k, 201, Exec::Serial);
    auto p = vandermonde_certificate(n, k, 201, Exec::Parallel);
    CHECK(s.A == p.A);
    CHECK(s.B == p.B);
  }
}

TEST_CASE("certificate bounds actual members") {
  // the sharp n = 2 value never exceeds the certified bound
  auto c = vandermonde_certificate(2, 1);
  for (double T : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double sharp = T <= 2 ? 2 / T + T / 2 : 2.0;
    CHECK(c.bound(1, 1, T) >= sharp);
  }
  auto c12 = vandermonde_certificate(12, 5);
  CHECK(std::isfinite(c12.A));
  CHECK(std::isfinite(c12.B));
}
