#include "landau/pwpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landau {

namespace {

template <class S>
void validate_impl(const BasicSpline<S>& f) {
  if (f.knots.size() < 2) throw StructuralError("spline needs at least two knots");
  if (f.pieces.size() + 1 != f.knots.size())
    throw StructuralError("spline needs exactly one piece per knot interval");
  if (f.n_smooth < 0) throw StructuralError("negative smoothness class");
  for (std::size_t i = 0; i + 1 < f.knots.size(); ++i) {
    if (!(f.knots[i + 1] > f.knots[i]))
      throw StructuralError("knots must be strictly increasing (index " + std::to_string(i) + ")");
    if (!(f.knots[i + 1] - f.knots[i] >= S(kMinKnotGap)))
      throw StructuralError("knot spacing below 1e-12 at index " + std::to_string(i));
  }
}

double factorial_d(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

void validate(const Spline& f) {
  validate_impl(f);
  for (double k : f.knots)
    if (!std::isfinite(k)) throw StructuralError("non-finite knot");
}
void validate(const ExactSpline& f) { validate_impl(f); }

Spline to_numeric(const ExactSpline& f) {
  Spline g;
  g.n_smooth = f.n_smooth;
  for (const auto& k : f.knots) g.knots.push_back(to_double(k));
  for (const auto& p : f.pieces) g.pieces.push_back(to_double(p));
  return g;
}

ExactSpline to_exact(const Spline& f) {
  ExactSpline g;
  g.n_smooth = f.n_smooth;
  for (double k : f.knots) g.knots.push_back(rational_from_double(k));
  for (const auto& p : f.pieces) {
    std::vector<Rational> c;
    for (double v : p.coeffs()) c.push_back(rational_from_double(v));
    g.pieces.emplace_back(std::move(c));
  }
  return g;
}

std::size_t locate(const Spline& f, double t) {
  auto it = std::upper_bound(f.knots.begin(), f.knots.end(), t);
  std::size_t i = it == f.knots.begin() ? 0 : static_cast<std::size_t>(it - f.knots.begin()) - 1;
  return std::min(i, f.size() - 1);
}

std::size_t locate(const ExactSpline& f, const Rational& t) {
  auto it = std::upper_bound(f.knots.begin(), f.knots.end(), t);
  std::size_t i = it == f.knots.begin() ? 0 : static_cast<std::size_t>(it - f.knots.begin()) - 1;
  return std::min(i, f.size() - 1);
}

double eval(const Spline& f, double t, int deriv) {
  const std::size_t i = locate(f, t);
  return f.pieces[i].derivative(deriv).eval(t - f.knots[i]);
}

Rational eval(const ExactSpline& f, const Rational& t, int deriv) {
  const std::size_t i = locate(f, t);
  return f.pieces[i].derivative(deriv)(t - f.knots[i]);
}

double total_variation(const Spline& f) {
  double tv = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    const double h = f.width(i);
    std::vector<double> pts{0.0};
    for (double r : real_roots(p.derivative(), 0.0, h))
      if (r > 0 && r < h) pts.push_back(r);
    pts.push_back(h);
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) tv += std::abs(p.eval(pts[j + 1]) - p.eval(pts[j]));
  }
  return tv;
}

double sup_abs(const Spline& f, int deriv) {
  double m = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    m = std::max(m, max_abs_on(f.pieces[i].derivative(deriv), 0.0, f.width(i)));
  return m;
}

// ---------------------------------------------------------------- membership

MembershipReport membership(const Spline& f, int n, double a, double b) {
  validate(f);
  if (n < 1) throw DomainError("membership: n must be >= 1");
  if (!(a > 0) || !(b > 0)) throw DomainError("membership: a and b must be positive");
  MembershipReport rep;
  rep.numeric = true;
  const double tau = kJoinTolerance;
  auto add = [&](ViolationKind k, std::size_t i, double loc, double excess, std::string d) {
    rep.violations.push_back({k, i, loc, excess, std::move(d)});
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    const double h = f.width(i);
    for (int j = n + 1; j <= p.degree(); ++j)
      if (std::abs(p.coeff(j)) > tau)
        add(ViolationKind::Degree, i, f.knots[i], std::abs(p.coeff(j)),
            "coefficient of degree " + std::to_string(j) + " exceeds the class degree");
    if (i + 1 < f.size()) {
      for (int j = 0; j < n; ++j) {
        const double l = p.derivative(j).eval(h);
        const double r = f.pieces[i + 1].derivative(j).eval(0.0);
        if (std::abs(l - r) > tau)
          add(ViolationKind::Join, i, f.knots[i + 1], std::abs(l - r),
              "derivative " + std::to_string(j) + " jumps at knot");
      }
    }
    // sup |f| on the piece
    double best = 0, where = 0;
    std::vector<double> cand{0.0, h};
    for (double r : real_roots(p.derivative(), 0.0, h)) cand.push_back(r);
    for (double s : cand) {
      const double v = std::abs(p.eval(s));
      if (v > best) best = v, where = s;
    }
    if (best > a + tau) add(ViolationKind::Value, i, f.knots[i] + where, best - a, "|f| exceeds a");
    if (p.degree() <= n) {
      const double top = std::abs(p.coeff(n)) * factorial_d(n);
      if (top > b + tau)
        add(ViolationKind::Derivative, i, f.knots[i], top - b, "|f^(n)| exceeds b");
    }
  }
  rep.member = rep.violations.empty();
  return rep;
}

MembershipReport membership(const ExactSpline& f, int n, const Rational& a, const Rational& b) {
  validate(f);
  if (n < 1) throw DomainError("membership: n must be >= 1");
  if (a <= 0 || b <= 0) throw DomainError("membership: a and b must be positive");
  MembershipReport rep;
  rep.numeric = false;
  auto add = [&](ViolationKind k, std::size_t i, const Rational& loc, const Rational& excess,
                 std::string d) {
    rep.violations.push_back({k, i, to_double(loc), to_double(excess), std::move(d)});
  };
  const Rational nfact(factorial(static_cast<unsigned>(n)));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    const Rational h = f.width(i);
    if (p.degree() > n)
      add(ViolationKind::Degree, i, f.knots[i], abs(p.leading()),
          "degree " + std::to_string(p.degree()) + " exceeds the class degree");
    if (i + 1 < f.size()) {
      for (int j = 0; j < n; ++j) {
        const Rational l = p.derivative(j)(h);
        const Rational r = f.pieces[i + 1].derivative(j)(Rational(0));
        if (l != r)
          add(ViolationKind::Join, i, f.knots[i + 1], abs(l - r),
              "derivative " + std::to_string(j) + " jumps at knot");
      }
    }
    const Poly ca = Poly::constant(a);
    if (!nonnegative_on(ca - p, 0, h) || !nonnegative_on(ca + p, 0, h)) {
      const PolyD pd = to_double(p);
      add(ViolationKind::Value, i, f.knots[i],
          Rational(rational_from_double(max_abs_on(pd, 0.0, to_double(h)))) - a, "|f| exceeds a");
    }
    if (p.degree() <= n) {
      const Rational top = abs(p.coeff(n)) * nfact;
      if (top > b) add(ViolationKind::Derivative, i, f.knots[i], top - b, "|f^(n)| exceeds b");
    }
  }
  rep.member = rep.violations.empty();
  return rep;
}

MembershipReport membership_any(const AnySpline& f, int n, double a, double b) {
  if (const auto* e = std::get_if<ExactSpline>(&f))
    return membership(*e, n, rational_from_double(a), rational_from_double(b));
  return membership(std::get<Spline>(f), n, a, b);
}

// ---------------------------------------------------------------- contacts

namespace {

constexpr double kContactTolerance = 1e-9;
constexpr double kDerivTolerance = 1e-7;

void merge_points(std::vector<ContactPoint>& pts, const std::vector<ContactInterval>& ivs) {
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
  std::vector<ContactPoint> out;
  for (auto& p : pts) {
    bool inside = false;
    for (const auto& iv : ivs)
      if (p.t >= iv.lo - kContactTolerance && p.t <= iv.hi + kContactTolerance) inside = true;
    if (inside) continue;
    const bool same = !out.empty() &&
                      (p.t_exact && out.back().t_exact ? *p.t_exact == *out.back().t_exact
                                                       : std::abs(p.t - out.back().t) <= kContactTolerance);
    if (same)
      out.back().multiplicity = std::max(out.back().multiplicity, p.multiplicity);
    else
      out.push_back(p);
  }
  pts = std::move(out);
}

void merge_intervals(std::vector<ContactInterval>& ivs) {
  std::vector<ContactInterval> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && out.back().sign == iv.sign && std::abs(out.back().hi - iv.lo) <= kContactTolerance)
      out.back().hi = iv.hi;
    else
      out.push_back(iv);
  }
  ivs = std::move(out);
}

}  // namespace

ContactSet contact_set(const Spline& f, int n, double a) {
  validate(f);
  ContactSet cs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    const double h = f.width(i);
    // identically +-a on the piece?
    bool flat = std::abs(std::abs(p.coeff(0)) - a) <= kContactTolerance;
    double pw = h;
    for (int j = 1; flat && j <= p.degree(); ++j, pw *= h)
      if (std::abs(p.coeff(j)) * pw > kContactTolerance) flat = false;
    if (flat) {
      cs.intervals.push_back({f.knots[i], f.knots[i + 1], p.coeff(0) > 0 ? 1 : -1});
      continue;
    }
    std::vector<double> cand{0.0, h};
    for (double r : real_roots(p.derivative(), 0.0, h)) cand.push_back(r);
    for (double s : cand) {
      const double v = p.eval(s);
      if (std::abs(std::abs(v) - a) > kContactTolerance) continue;
      int m = n;
      for (int j = 1; j < n; ++j) {
        if (std::abs(p.derivative(j).eval(s)) > kDerivTolerance) {
          m = j;
          break;
        }
      }
      cs.points.push_back({f.knots[i] + s, std::nullopt, v > 0 ? 1 : -1, m});
    }
  }
  merge_intervals(cs.intervals);
  merge_points(cs.points, cs.intervals);
  return cs;
}

ContactSet contact_set(const ExactSpline& f, int n, const Rational& a) {
  validate(f);
  ContactSet cs;
  const Rational width = Rational(1, BigInt(1) << 52);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    const Rational h = f.width(i);
    if (p.degree() <= 0 && abs(p.coeff(0)) == a) {
      cs.intervals.push_back({to_double(f.knots[i]), to_double(f.knots[i + 1]), p.coeff(0).sign()});
      continue;
    }
    for (int sgn : {1, -1}) {
      const Poly g = p - Poly::constant(a * sgn);
      auto endpoint = [&](const Rational& s) {
        if (g(s) != 0) return;
        int m = n;
        for (int j = 1; j < n; ++j)
          if (p.derivative(j)(s) != 0) {
            m = j;
            break;
          }
        const Rational t = f.knots[i] + s;
        cs.points.push_back({to_double(t), t, sgn, m});
      };
      endpoint(Rational(0));
      endpoint(h);
      const Poly d = squarefree_part(g);
      for (const auto& [lo, hi] : isolate_roots(d, Rational(0), h, width)) {
        if (hi == h && g(h) == 0) continue;  // the endpoint itself
        int m = n;
        for (int j = 1; j < n; ++j) {
          const Poly common = gcd(d, p.derivative(j));
          if (common.degree() <= 0 || count_roots(common, lo, hi) == 0) {
            m = j;
            break;
          }
        }
        cs.points.push_back({to_double(f.knots[i] + (lo + hi) / 2), std::nullopt, sgn, m});
      }
    }
  }
  merge_intervals(cs.intervals);
  merge_points(cs.points, cs.intervals);
  return cs;
}

namespace {

ExtremeVerdict finish_verdict(ContactSet cs, int n, std::vector<std::size_t> bad, bool numeric) {
  ExtremeVerdict v;
  v.numeric = numeric;
  v.contacts = std::move(cs);
  if (!v.contacts.intervals.empty()) {
    v.multiplicity_sum = kInfiniteMultiplicity;
  } else {
    long long s = 0;
    for (const auto& p : v.contacts.points) s += p.multiplicity;
    v.multiplicity_sum = static_cast<int>(std::min<long long>(s, kInfiniteMultiplicity - 1));
  }
  v.condition_ii_violations = std::move(bad);
  v.is_extreme = v.multiplicity_sum >= n && v.condition_ii_violations.empty();
  return v;
}

bool inside_contact_interval(const ContactSet& cs, double lo, double hi) {
  for (const auto& iv : cs.intervals)
    if (lo >= iv.lo - kContactTolerance && hi <= iv.hi + kContactTolerance) return true;
  return false;
}

}  // namespace

ExtremeVerdict is_extreme_point(const Spline& f, int n, double a, double b) {
  auto rep = membership(f, n, a, b);
  if (!rep.member) throw NotAMember(std::move(rep));
  ContactSet cs = contact_set(f, n, a);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (inside_contact_interval(cs, f.knots[i], f.knots[i + 1])) continue;
    if (std::abs(std::abs(f.pieces[i].coeff(n)) * factorial_d(n) - b) > kJoinTolerance) bad.push_back(i);
  }
  return finish_verdict(std::move(cs), n, std::move(bad), true);
}

ExtremeVerdict is_extreme_point(const ExactSpline& f, int n, const Rational& a, const Rational& b) {
  auto rep = membership(f, n, a, b);
  if (!rep.member) throw NotAMember(std::move(rep));
  ContactSet cs = contact_set(f, n, a);
  std::vector<std::size_t> bad;
  const Rational nfact(factorial(static_cast<unsigned>(n)));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& p = f.pieces[i];
    if (p.degree() <= 0 && abs(p.coeff(0)) == a) continue;
    if (abs(p.coeff(n)) * nfact != b) bad.push_back(i);
  }
  return finish_verdict(std::move(cs), n, std::move(bad), false);
}

ExtremeVerdict is_extreme_point_any(const AnySpline& f, int n, double a, double b) {
  if (const auto* e = std::get_if<ExactSpline>(&f))
    return is_extreme_point(*e, n, rational_from_double(a), rational_from_double(b));
  return is_extreme_point(std::get<Spline>(f), n, a, b);
}

// ---------------------------------------------------------------- combine

namespace {

template <class S, class Eq>
BasicSpline<S> combine_impl(const BasicSpline<S>& f, const BasicSpline<S>& g, const S& alpha,
                            const S& beta, Eq same) {
  if (!same(f.left(), g.left()) || !same(f.right(), g.right()))
    throw DomainError("combine: domains differ");
  std::vector<S> ks = f.knots;
  ks.insert(ks.end(), g.knots.begin(), g.knots.end());
  std::sort(ks.begin(), ks.end());
  std::vector<S> knots;
  for (const auto& k : ks)
    if (knots.empty() || !same(k, knots.back())) knots.push_back(k);
  knots.back() = f.right();
  BasicSpline<S> h;
  h.n_smooth = std::min(f.n_smooth, g.n_smooth);
  h.knots = knots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const S mid = (knots[i] + knots[i + 1]) / S(2);
    const std::size_t a = locate(f, mid), b = locate(g, mid);
    BasicPoly<S> p = f.pieces[a].shifted(knots[i] - f.knots[a]) * alpha +
                     g.pieces[b].shifted(knots[i] - g.knots[b]) * beta;
    h.pieces.push_back(std::move(p));
  }
  return h;
}

}  // namespace

Spline combine(const Spline& f, const Spline& g, double alpha, double beta) {
  return combine_impl(f, g, alpha, beta,
                      [](double x, double y) { return std::abs(x - y) <= kMinKnotGap * std::max(1.0, std::abs(x)); });
}

ExactSpline combine(const ExactSpline& f, const ExactSpline& g, const Rational& alpha,
                    const Rational& beta) {
  return combine_impl(f, g, alpha, beta, [](const Rational& x, const Rational& y) { return x == y; });
}

}  // namespace landau
