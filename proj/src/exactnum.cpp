#include "landau/exactnum.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

namespace {

std::mutex g_mu;
std::vector<Rational> g_bernoulli{Rational(1)};
std::vector<Rational> g_euler{Rational(1)};
std::vector<Poly> g_euler_poly{Poly{Rational(1)}};

void check_index(int m, int cap = kMaxSequenceIndex) {
  if (m < 0) throw DomainError("negative index " + std::to_string(m));
  if (m > cap) throw IndexTooLarge("index too large: " + std::to_string(m));
}

// caller holds g_mu
const Rational& bernoulli_locked(int m) {
  while (static_cast<int>(g_bernoulli.size()) <= m) {
    const unsigned k = static_cast<unsigned>(g_bernoulli.size());
    // sum_{j<=k} C(k+1, j) B_j = 0
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rational(binomial(k + 1, k)));
  }
  return g_bernoulli[m];
}

}  // namespace

Rational bernoulli(int m) {
  check_index(m);
  std::lock_guard<std::mutex> lock(g_mu);
  return bernoulli_locked(m);
}

Rational euler_number(int m) {
  check_index(m);
  std::lock_guard<std::mutex> lock(g_mu);
  while (static_cast<int>(g_euler.size()) <= m) {
    const unsigned k = static_cast<unsigned>(g_euler.size());
    Rational s = 0;
    if (k % 2 == 0)
      for (unsigned j = 0; j < k; j += 2) s += Rational(binomial(k, j)) * g_euler[j];
    g_euler.push_back(-s);
  }
  return g_euler[m];
}

Poly euler_poly(int m) {
  check_index(m);
  std::lock_guard<std::mutex> lock(g_mu);
  while (static_cast<int>(g_euler_poly.size()) <= m) {
    const long long k = static_cast<long long>(g_euler_poly.size());
    Poly p = g_euler_poly.back().antiderivative() * Rational(k);
    p += Poly::constant(-p(Rational(1)) / 2);
    g_euler_poly.push_back(std::move(p));
  }
  return g_euler_poly[m];
}

Rational euler_poly_at_zero(int m) {
  check_index(m);
  std::lock_guard<std::mutex> lock(g_mu);
  const Rational& b = bernoulli_locked(m + 1);
  Rational p2 = Rational(BigInt(1) << (m + 2));
  return b * (Rational(2) - p2) / Rational(m + 1);
}

}  // namespace landau
