#include "landau/poly.hpp"

#include <stdexcept>

namespace landau {

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Poly{}, num};
  std::vector<Rational> q(num.degree() - dd + 1, Rational(0));
  const Rational lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lead;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * den.coeffs()[j];
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  return monic(divmod(p, gcd(p, p.derivative())).first);
}

std::vector<Poly> yun(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly f = monic(p);
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = divmod(f, a).first;
  Poly c = divmod(fp, a).first;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> s;
  if (p.is_zero()) return s;
  s.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return s;
  s.push_back(d);
  while (true) {
    Poly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

namespace {

int sign_changes(const std::vector<Poly>& s, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : s) {
    int v = q(x).sign();
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

void isolate(const std::vector<Poly>& s, const Rational& lo, const Rational& hi,
             const Rational& width, std::vector<std::pair<Rational, Rational>>& out) {
  int c = sign_changes(s, lo) - sign_changes(s, hi);
  if (c == 0) return;
  if (c == 1 && hi - lo <= width) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(s, lo, mid, width, out);
  isolate(s, mid, hi, width, out);
}

}  // namespace

int count_roots(const std::vector<Poly>& sturm, const Rational& lo, const Rational& hi) {
  if (sturm.empty()) return 0;
  return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

int count_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  return count_roots(sturm_sequence(p), lo, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p, const Rational& lo,
                                                         const Rational& hi,
                                                         const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  isolate(sturm_sequence(p), lo, hi, width, out);
  return out;
}

bool nonnegative_on(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return true;
  if (p(lo) < 0 || p(hi) < 0) return false;
  if (lo == hi || p.degree() == 0) return true;
  // odd-multiplicity factors carry the sign changes
  Poly odd = Poly::constant(1);
  const auto parts = yun(p);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd = odd * parts[i];
  if (odd.degree() > 0) {
    int inside = count_roots(odd, lo, hi) - (odd(hi) == 0 ? 1 : 0);
    if (inside > 0) return false;
  }
  // no sign change inside: any non-root sample decides
  const int n = p.degree() + 2;
  for (int j = 1; j < n; ++j) {
    Rational x = lo + (hi - lo) * Rational(j, n);
    int v = p(x).sign();
    if (v != 0) return v > 0;
  }
  return true;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= A[i][i];
  return b;
}

namespace {

double bisect(const PolyD& p, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = p.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(const PolyD& p, double lo, double hi) {
  std::vector<double> roots;
  const int d = p.degree();
  if (d <= 0 || hi < lo) return roots;
  if (d == 1) {
    double r = -p.coeff(0) / p.coeff(1);
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  std::vector<double> pts{lo};
  for (double c : real_roots(p.derivative(), lo, hi))
    if (c > lo && c < hi) pts.push_back(c);
  pts.push_back(hi);

  const double m = std::max({1.0, std::abs(lo), std::abs(hi)});
  double scale = 0, pw = 1;
  for (double c : p.coeffs()) {
    scale += std::abs(c) * pw;
    pw *= m;
  }
  const double tol = 1e-13 * scale;

  std::vector<double> vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vals[i] = p.eval(pts[i]);
    if (std::abs(vals[i]) <= tol) roots.push_back(pts[i]);
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (std::abs(vals[i]) <= tol || std::abs(vals[i + 1]) <= tol) continue;
    if ((vals[i] < 0) != (vals[i + 1] < 0)) roots.push_back(bisect(p, pts[i], pts[i + 1], vals[i]));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-10 * std::max(1.0, std::abs(r))) out.push_back(r);
  return out;
}

double max_abs_on(const PolyD& p, double lo, double hi) {
  double best = std::max(std::abs(p.eval(lo)), std::abs(p.eval(hi)));
  for (double c : real_roots(p.derivative(), lo, hi)) best = std::max(best, std::abs(p.eval(c)));
  return best;
}

}  // namespace landau
