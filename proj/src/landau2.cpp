#include "landau/landau2.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Piecewise quadratic starting at `start` with value v0 and slope d0; each segment
// runs to `end` with constant second derivative. Zero-width segments are dropped.
Spline quadratic_chain(double start, double v0, double d0,
                       const std::vector<std::pair<double, double>>& segments) {
  std::vector<double> knots{start}, nth;
  for (const auto& [end, c] : segments) {
    if (end - knots.back() <= kMinKnotGap) continue;
    knots.push_back(end);
    nth.push_back(c);
  }
  return spline_from_nth_derivative<double>(knots, {v0, d0}, nth);
}

// a * f(t sqrt(b/a)): maps the unit class on [0, T sqrt(b/a)] onto L_2(a, b; [0, T]).
Spline unscale(const Spline& f, double a, double b) {
  return transform(f, 0.0, std::sqrt(b / a), a);
}

void check_ab(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw DomainError("a and b must be positive");
}

}  // namespace

double phi(double x) {
  if (x < 0) throw DomainError("phi needs x >= 0");
  return std::sqrt(2 * x * x + 4) - x;
}

double G(double x, double y) {
  if (x < 0 || y < 0) throw DomainError("G needs x, y >= 0");
  if (!(x + y > 0)) throw DomainError("G needs x + y > 0");
  return 2 / (x + y) + (x * x + y * y) / (2 * (x + y));
}

BoundResult sigma_inf(double a, double b, double T) {
  check_ab(a, b);
  if (!(T > 0)) throw DomainError("segment length must be positive");
  const double Tu = T * std::sqrt(b / a);
  BoundResult r;
  if (T <= 2 * std::sqrt(a / b)) {
    r.value = 2 * a / T + b * T / 2;
    r.provenance = "sigma_inf:short_segment";
    r.witness = unscale(quadratic_chain(0, -1, 2 / Tu + Tu / 2, {{Tu, -1}}), a, b);
  } else {
    r.value = 2 * std::sqrt(a * b);
    r.provenance = "sigma_inf:long_segment";
    r.witness = unscale(quadratic_chain(0, -1, 2, {{2, -1}, {Tu, 0}}), a, b);
  }
  r.lo = r.hi = r.value;
  r.witness_at = 0.0;
  return r;
}

BoundResult sigma_inf_half_line(double a, double b) {
  check_ab(a, b);
  BoundResult r;
  r.value = r.lo = r.hi = 2 * std::sqrt(a * b);
  r.provenance = "sigma_inf:half_line";
  r.note = "witness shown on [0, 4 sqrt(a/b)]; it stays constant beyond";
  r.witness = unscale(quadratic_chain(0, -1, 2, {{2, -1}, {4, 0}}), a, b);
  r.witness_at = 0.0;
  return r;
}

BoundResult sigma_inf_line(double a, double b) {
  check_ab(a, b);
  BoundResult r;
  r.value = r.lo = r.hi = std::sqrt(2 * a * b);
  r.provenance = "sigma_inf:whole_line";
  r.note = "witness is one period of the comparison function q";
  r.witness = unscale(q_spline(-2 * kSqrt2, 2 * kSqrt2), a, b);
  r.witness_at = -kSqrt2 * std::sqrt(a / b);
  return r;
}

BoundResult sigma_pointwise(const PointwiseQuery& q) {
  check_ab(q.a, q.b);
  if (!(q.T > 0)) throw DomainError("segment length must be positive");
  if (q.t0 < 0 || q.t0 > q.T) throw DomainError("t0 must lie in [0, T]");
  const double a = q.a, b = q.b, T = q.T;
  const bool reflect = q.t0 > T / 2;
  const double t = reflect ? T - q.t0 : q.t0;
  const double s = std::sqrt(b / a);
  const double u = t * s, Tu = T * s;

  BoundResult r;
  Spline w;
  if (t <= std::sqrt(2 * a / b)) {
    if (T <= std::sqrt(2 * t * t + 4 * a / b)) {
      r.value = 2 * a / T + b * T / 2 - b * t * (T - t) / T;
      r.provenance = "pointwise:short";
      const double C = G(u, Tu - u);
      w = quadratic_chain(0, -1, C - u, {{u, 1}, {Tu, -1}});
    } else {
      r.value = std::sqrt(2 * t * t * b * b + 4 * a * b) - b * t;
      r.provenance = "pointwise:middle";
      const double p = phi(u);
      w = quadratic_chain(0, -1, p - u, {{u, 1}, {u + p, -1}, {Tu, 0}});
    }
  } else {
    r.value = std::sqrt(2 * a * b);
    r.provenance = "pointwise:interior";
    w = translate(q_spline(-u - kSqrt2, Tu - u - kSqrt2), u + kSqrt2);
    w.knots.front() = 0;
    w.knots.back() = Tu;
  }
  if (reflect) w = transform(w, Tu, -1.0, -1.0);
  w = unscale(w, a, b);
  w.knots.front() = 0;
  w.knots.back() = T;
  r.lo = r.hi = r.value;
  r.witness = std::move(w);
  r.witness_at = q.t0;
  return r;
}

std::pair<double, double> q_eval(double t) {
  const double P = 4 * kSqrt2;
  const double r = t - P * std::floor((t + kSqrt2) / P);  // in [-sqrt2, 3 sqrt2)
  if (r <= kSqrt2) return {1 - r * r / 2, -r};
  const double w = r - 2 * kSqrt2;
  return {-(1 - w * w / 2), w};
}

Spline q_spline(double lo, double hi) {
  if (!(hi > lo)) throw DomainError("q_spline needs lo < hi");
  std::vector<double> knots{lo};
  const long long first = static_cast<long long>(std::floor((lo / kSqrt2 - 1) / 2)) + 1;
  for (long long j = first;; ++j) {
    const double x = (2 * j + 1) * kSqrt2;
    if (x >= hi) break;
    if (x - knots.back() > kMinKnotGap && hi - x > kMinKnotGap) knots.push_back(x);
  }
  knots.push_back(hi);
  Spline f;
  f.knots = knots;
  f.n_smooth = 2;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const auto [v, d] = q_eval(knots[i]);
    const double mid = q_eval(0.5 * (knots[i] + knots[i + 1])).first;
    const double c = mid >= 0 ? -1.0 : 1.0;  // q'' = -sign(q) off the knots
    f.pieces.push_back(PolyD{v, d, c / 2});
  }
  return f;
}

double pointwise_speed_bound(double f_val) {
  if (std::abs(f_val) > 1) throw DomainError("speed bound needs |f| <= 1");
  return std::sqrt(2 * (1 - std::abs(f_val)));
}

namespace {

void require_unit_member(const Spline& f) {
  auto rep = membership(f, 2, 1.0, 1.0);
  if (!rep.member) throw NotAMember(std::move(rep));
}

bool speed_ok(double v, double d) { return d * d <= 2 * (1 - std::abs(v)) + kJoinTolerance; }

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

bool extendable_to_line(const Spline& f) {
  require_unit_member(f);
  return speed_ok(eval(f, f.left()), eval(f, f.left(), 1)) &&
         speed_ok(eval(f, f.right()), eval(f, f.right(), 1));
}

Spline extend_to_line(const Spline& f) {
  if (!extendable_to_line(f))
    throw Refusal("extend_to_line: |f'| <= sqrt(2(1 - |f|)) fails at an endpoint");
  const double L = f.left(), R = f.right();
  const double v0 = eval(f, L), d0 = eval(f, L, 1);
  const double v1 = eval(f, R), d1 = eval(f, R, 1);
  const double w0 = std::abs(d0), w1 = std::abs(d1);
  Spline g;
  g.n_smooth = 2;
  g.knots.push_back(L - w0 - 1);
  g.pieces.push_back(PolyD{v0 - sgn(d0) * d0 * d0 / 2});
  if (w0 > kMinKnotGap) {
    g.knots.push_back(L - w0);
    g.pieces.push_back(PolyD{v0, d0, sgn(d0) / 2}.shifted(-w0));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.knots.push_back(f.knots[i]);
    g.pieces.push_back(f.pieces[i]);
  }
  g.knots.push_back(R);
  if (w1 > kMinKnotGap) {
    g.pieces.push_back(PolyD{v1, d1, -sgn(d1) / 2});
    g.knots.push_back(R + w1);
  }
  g.pieces.push_back(PolyD{v1 + sgn(d1) * d1 * d1 / 2});
  g.knots.push_back(R + w1 + 1);
  return g;
}

Spline prolong_affine(const Spline& f, double h, double eps, double theta) {
  require_unit_member(f);
  if (!(std::abs(theta) <= 1)) throw Refusal("prolong_affine: requires |theta| <= 1");
  if (!(eps > 0 && eps <= 1)) throw Refusal("prolong_affine: requires 0 < eps <= 1");
  if (!(h > 0)) throw Refusal("prolong_affine: requires h > 0");
  const double T = f.right() - f.left();
  const double cap = eps / (std::abs(theta) + sigma_inf(1, 1, T).value);
  if (h > cap * (1 + 1e-12)) throw Refusal("prolong_affine: requires h <= eps / (|theta| + sigma_inf(T))");
  Spline g = f;
  for (auto& p : g.pieces) p *= 1 - eps;
  const double R = f.right();
  g.pieces.push_back(PolyD{(1 - eps) * eval(f, R), (1 - eps) * eval(f, R, 1), theta / 2});
  g.knots.push_back(R + h);
  return g;
}

Spline insert_bump(const Spline& f, double t0, double h) {
  require_unit_member(f);
  if (t0 < f.left() || t0 >= f.right()) throw Refusal("insert_bump: requires t0 in [left, right)");
  const double v = eval(f, t0), d = eval(f, t0, 1);
  if (std::abs(d) > kJoinTolerance) throw Refusal("insert_bump: requires f'(t0) = 0");
  if (!(v < 1)) throw Refusal("insert_bump: requires f(t0) < 1");
  if (!(h > 0)) throw Refusal("insert_bump: requires h > 0");
  if (h > 4 * std::sqrt(1 - v)) throw Refusal("insert_bump: requires h <= 4 sqrt(1 - f(t0))");
  Spline g;
  g.n_smooth = 2;
  if (t0 > f.left()) g = restrict_to(f, f.left(), t0);
  else g.knots.push_back(t0);
  const double q = h / 4;
  g.pieces.push_back(PolyD{v, 0, 0.5});
  g.knots.push_back(t0 + q);
  g.pieces.push_back(PolyD{v + q * q / 2, q, -0.5});
  g.knots.push_back(t0 + 3 * q);
  g.pieces.push_back(PolyD{v + q * q / 2, -q, 0.5});
  g.knots.push_back(t0 + h);
  const Spline tail = translate(restrict_to(f, t0, f.right()), h);
  g.pieces.insert(g.pieces.end(), tail.pieces.begin(), tail.pieces.end());
  g.knots.insert(g.knots.end(), tail.knots.begin() + 1, tail.knots.end());
  return g;
}

// ---------------------------------------------------------------- sigma_1

const char* sigma1_rule_name(Sigma1Rule r) {
  switch (r) {
    case Sigma1Rule::Short: return "T<=2";
    case Sigma1Rule::Parabola: return "2<=T<=4";
    case Sigma1Rule::Lattice: return "lattice 2N*sqrt2+4";
    case Sigma1Rule::Bracket: return "T/sqrt2 bracket";
    case Sigma1Rule::Subadditive: return "subadditive";
  }
  return "?";
}

Spline lattice_witness(int N) {
  if (N < 0) throw DomainError("lattice index must be >= 0");
  const double L = 2 * N * kSqrt2;
  Spline f = quadratic_chain(0, -1, 2, {{2, -1}});
  if (N > 0) f = concat(f, translate(q_spline(0, L), 2.0));
  const double sign = N % 2 ? -1.0 : 1.0;
  Spline tail;
  tail.n_smooth = 2;
  tail.knots = {L + 2, L + 4};
  tail.pieces = {PolyD{sign, 0, -sign / 2}};
  return concat(f, tail);
}

namespace {

double lattice_length(int N) { return 2 * N * kSqrt2 + 4; }

std::optional<double> exact_unit(double T, Sigma1Rule* rule) {
  if (T <= 0) {
    *rule = Sigma1Rule::Short;
    return 0.0;
  }
  // regime ends snap within 1e-12 relative, the scaling T sqrt(b/a) rounds
  if (T <= 2 * (1 + 1e-12)) {
    *rule = Sigma1Rule::Short;
    return 2.0;
  }
  if (T <= 4 * (1 + 1e-12)) {
    *rule = Sigma1Rule::Parabola;
    T = std::min(T, 4.0);
    return T * T / 2 - 2 * T + 4;
  }
  const long long N = std::llround((T - 4) / (2 * kSqrt2));
  if (N >= 1 && std::abs(T - lattice_length(static_cast<int>(N))) <= 1e-12 * T) {
    *rule = Sigma1Rule::Lattice;
    return 2.0 * N + 4;
  }
  return std::nullopt;
}

// Cheapest cover of a stretch of length R by m pieces of length <= 4 with exact
// values, plus filler costing 2 per unit length (valid once the whole segment
// has length >= 2, since sigma_inf = 2 there).
double filler_cost(double R) {
  double best = 2 * R;
  const int mmax = static_cast<int>(std::ceil(R / 2)) + 1;
  for (int m = 1; m <= mmax; ++m) {
    const double X = std::min(R, 4.0 * m);
    double c;
    if (X <= 2.0 * m) c = 2.0 * m + 2 * (R - X);
    else c = X * X / (2 * m) - 2 * X + 4.0 * m + 2 * (R - X);
    best = std::min(best, c);
  }
  return best;
}

// Upper bound for the unit class on a segment of length T > 4: minimum over
// decompositions into one lattice piece and filler, or the T/sqrt2 + 5 bracket.
// The decomposition family is closed under concatenation, hence subadditive.
double upper_unit(double T, Sigma1Rule* rule) {
  double best = T / kSqrt2 + 5;
  *rule = Sigma1Rule::Bracket;
  auto consider = [&](double v) {
    if (v < best) {
      best = v;
      *rule = Sigma1Rule::Subadditive;
    }
  };
  consider(filler_cost(T));
  const int top = static_cast<int>(std::floor((T - 4) / (2 * kSqrt2)));
  for (int N = std::max(1, top - 10); N <= top; ++N)
    if (lattice_length(N) <= T) consider(2.0 * N + 4 + filler_cost(T - lattice_length(N)));
  return best;
}

// Largest value known at a smaller length in [2, T), by monotonicity there.
double monotone_floor(double T) {
  if (T <= 2) return 0;
  double best = 2;
  if (T > 4) best = 4;
  const int top = static_cast<int>(std::floor((T - 4) / (2 * kSqrt2)));
  for (int N = top; N >= 1; --N)
    if (lattice_length(N) < T) {
      best = std::max(best, 2.0 * N + 4);
      break;
    }
  return best;
}

}  // namespace

Sigma1Result sigma1(double a, double b, double T) {
  check_ab(a, b);
  if (T < 0) throw DomainError("segment length must be >= 0");
  const double Tu = T * std::sqrt(b / a);
  Sigma1Result res;
  Sigma1Rule rule;
  if (auto e = exact_unit(Tu, &rule)) {
    res.exact = a * *e;
    res.lower = res.upper = *res.exact;
    res.provenance = rule;
    Spline w;
    if (Tu <= 0) return res;
    if (rule == Sigma1Rule::Short) {
      w = quadratic_chain(0, -1, 2 / Tu - Tu / 2, {{Tu, 1}});
    } else if (rule == Sigma1Rule::Parabola) {
      w = quadratic_chain(0, 1, -2, {{Tu, 1}});
    } else {
      w = lattice_witness(static_cast<int>(std::llround((Tu - 4) / (2 * kSqrt2))));
    }
    w = unscale(w, a, b);
    w.knots.back() = T;
    res.witness = std::move(w);
    return res;
  }
  res.upper = a * upper_unit(Tu, &rule);
  res.provenance = rule;
  res.lower = a * std::max(Tu / kSqrt2, monotone_floor(Tu));
  return res;
}

}  // namespace landau
