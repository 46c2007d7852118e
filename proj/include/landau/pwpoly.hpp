#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "landau/errors.hpp"
#include "landau/poly.hpp"
#include "landau/rational.hpp"

namespace landau {

// Spline on [knots.front(), knots.back()]. Piece i lives on [knots[i], knots[i+1]]
// and its coefficients are in the local variable s = t - knots[i].
template <class S>
struct BasicSpline {
  std::vector<S> knots;
  std::vector<BasicPoly<S>> pieces;
  int n_smooth = 2;

  std::size_t size() const { return pieces.size(); }
  S left() const { return knots.front(); }
  S right() const { return knots.back(); }
  S width(std::size_t i) const { return knots[i + 1] - knots[i]; }
};

using Spline = BasicSpline<double>;
using ExactSpline = BasicSpline<Rational>;
using AnySpline = std::variant<Spline, ExactSpline>;

inline constexpr double kJoinTolerance = 1e-9;
inline constexpr double kMinKnotGap = 1e-12;
inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

void validate(const Spline& f);
void validate(const ExactSpline& f);

Spline to_numeric(const ExactSpline& f);
ExactSpline to_exact(const Spline& f);  // exact binary values of the doubles

std::size_t locate(const Spline& f, double t);
std::size_t locate(const ExactSpline& f, const Rational& t);
double eval(const Spline& f, double t, int deriv = 0);
Rational eval(const ExactSpline& f, const Rational& t, int deriv = 0);

// Integral of |f'| over the domain, exact per piece between critical points.
double total_variation(const Spline& f);
double sup_abs(const Spline& f, int deriv = 0);

enum class ViolationKind { Join, Degree, Value, Derivative };

struct Violation {
  ViolationKind kind;
  std::size_t piece;
  double location;
  double excess;
  std::string detail;
};

struct MembershipReport {
  bool member = true;
  bool numeric = true;
  std::vector<Violation> violations;
};

MembershipReport membership(const Spline& f, int n, double a, double b);
MembershipReport membership(const ExactSpline& f, int n, const Rational& a, const Rational& b);
MembershipReport membership_any(const AnySpline& f, int n, double a, double b);

struct ContactPoint {
  double t;
  std::optional<Rational> t_exact;  // set when the location is rational and known exactly
  int sign;
  int multiplicity;
};

struct ContactInterval {
  double lo, hi;
  int sign;
};

struct ContactSet {
  std::vector<ContactPoint> points;
  std::vector<ContactInterval> intervals;
};

ContactSet contact_set(const Spline& f, int n, double a);
ContactSet contact_set(const ExactSpline& f, int n, const Rational& a);

struct ExtremeVerdict {
  bool is_extreme = false;
  bool numeric = true;
  ContactSet contacts;
  int multiplicity_sum = 0;  // kInfiniteMultiplicity when a contact interval exists
  std::vector<std::size_t> condition_ii_violations;
};

struct NotAMember : std::runtime_error {
  MembershipReport report;
  explicit NotAMember(MembershipReport r)
      : std::runtime_error("function is not a member of the class"), report(std::move(r)) {}
};

// Throws NotAMember when membership fails.
ExtremeVerdict is_extreme_point(const Spline& f, int n, double a, double b);
ExtremeVerdict is_extreme_point(const ExactSpline& f, int n, const Rational& a, const Rational& b);
ExtremeVerdict is_extreme_point_any(const AnySpline& f, int n, double a, double b);

// ---- constructors and transformations ----

// Spline whose n-th derivative is the constant nth_values[i] on piece i, with
// f^{(j)}(knots[0]) = initial[j] for j < n.
template <class S>
BasicSpline<S> spline_from_nth_derivative(const std::vector<S>& knots,
                                          const std::vector<S>& initial,
                                          const std::vector<S>& nth_values) {
  const int n = static_cast<int>(initial.size());
  BasicSpline<S> f;
  f.knots = knots;
  f.n_smooth = n;
  std::vector<S> d = initial;  // derivatives at current knot
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    std::vector<S> c(n + 1);
    S fact = S(1);
    for (int j = 0; j < n; ++j) {
      if (j > 0) fact *= S(j);
      c[j] = d[j] / fact;
    }
    fact *= S(n);
    c[n] = nth_values[i] / fact;
    BasicPoly<S> p(c);
    const S h = knots[i + 1] - knots[i];
    for (int j = 0; j < n; ++j) d[j] = p.derivative(j).eval(h);
    f.pieces.push_back(std::move(p));
  }
  return f;
}

// g(t) = mu * f(lambda * (t - t0)), lambda != 0.
template <class S>
BasicSpline<S> transform(const BasicSpline<S>& f, const S& t0, const S& lambda, const S& mu) {
  if (lambda == S(0)) throw DomainError("transform: lambda must be nonzero");
  BasicSpline<S> g;
  g.n_smooth = f.n_smooth;
  const std::size_t m = f.size();
  if (lambda > S(0)) {
    for (const auto& k : f.knots) g.knots.push_back(t0 + k / lambda);
    for (const auto& p : f.pieces) g.pieces.push_back(p.scaled_argument(lambda) * mu);
  } else {
    for (std::size_t i = f.knots.size(); i-- > 0;) g.knots.push_back(t0 + f.knots[i] / lambda);
    for (std::size_t i = m; i-- > 0;)
      g.pieces.push_back(f.pieces[i].shifted(f.width(i)).scaled_argument(lambda) * mu);
  }
  return g;
}

template <class S>
BasicSpline<S> translate(const BasicSpline<S>& f, const S& shift) {
  BasicSpline<S> g = f;
  for (auto& k : g.knots) k += shift;
  return g;
}

template <class S>
BasicSpline<S> negate(const BasicSpline<S>& f) {
  BasicSpline<S> g = f;
  for (auto& p : g.pieces) p = -p;
  return g;
}

// Restriction to [lo, hi] inside the domain.
template <class S>
BasicSpline<S> restrict_to(const BasicSpline<S>& f, const S& lo, const S& hi) {
  if (!(lo < hi) || lo < f.left() || hi > f.right())
    throw DomainError("restrict: [lo, hi] must be a nondegenerate subsegment of the domain");
  BasicSpline<S> g;
  g.n_smooth = f.n_smooth;
  g.knots.push_back(lo);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const S a = f.knots[i], b = f.knots[i + 1];
    if (!(b > lo) || !(a < hi)) continue;
    const S start = a > lo ? a : lo;
    const S end = b < hi ? b : hi;
    g.pieces.push_back(start == a ? f.pieces[i] : f.pieces[i].shifted(start - a));
    g.knots.push_back(end);
  }
  return g;
}

// f on its domain followed by g; g's domain must start where f's ends.
template <class S>
BasicSpline<S> concat(const BasicSpline<S>& f, const BasicSpline<S>& g) {
  BasicSpline<S> h = f;
  h.knots.insert(h.knots.end(), g.knots.begin() + 1, g.knots.end());
  h.pieces.insert(h.pieces.end(), g.pieces.begin(), g.pieces.end());
  return h;
}

// alpha f + beta g on the common refinement; domains must coincide.
Spline combine(const Spline& f, const Spline& g, double alpha, double beta);
ExactSpline combine(const ExactSpline& f, const ExactSpline& g, const Rational& alpha,
                    const Rational& beta);

}  // namespace landau
