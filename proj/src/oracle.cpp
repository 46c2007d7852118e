#include "landau/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-10;
constexpr int kDegenerateRun = 50;

class Tableau {
 public:
  Tableau(const DenseLp& lp) : m_(lp.rows), n_(lp.cols + lp.rows), w_(n_ + 1), t_((m_ + 1) * w_, 0.0) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < lp.cols; ++j) at(i, j) = lp.A[static_cast<std::size_t>(i) * lp.cols + j];
      at(i, lp.cols + i) = 1;
      at(i, n_) = lp.rhs[i];
      basis_.push_back(lp.cols + i);
    }
    for (int j = 0; j < lp.cols; ++j) at(m_, j) = -lp.c[j];
  }

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  int rows() const { return m_; }
  int vars() const { return n_; }
  const std::vector<int>& basis() const { return basis_; }

  int entering(bool bland) const {
    int best = -1;
    double best_cost = -kCostEps;
    for (int j = 0; j < n_; ++j) {
      const double c = at(m_, j);
      if (c < -kCostEps) {
        if (bland) return j;
        if (c < best_cost) {
          best_cost = c;
          best = j;
        }
      }
    }
    return best;
  }

  // Minimum ratio; ties broken by the smaller basic variable index.
  int leaving(int col) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_; ++i) {
      const double a = at(i, col);
      if (a <= kPivotEps) continue;
      const double r = at(i, n_) / a;
      if (r < best_ratio || (r == best_ratio && basis_[i] < basis_[best])) {
        best_ratio = r;
        best = i;
      }
    }
    return best;
  }

  void pivot(int pr, int pc, Exec exec) {
    const double inv = 1 / at(pr, pc);
    double* prow = &t_[static_cast<std::size_t>(pr) * w_];
    nz_.clear();
    for (int j = 0; j <= n_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz_.push_back(j);
      }
    }
    prow[pc] = 1;
    const int total = m_ + 1;
    const int* nz = nz_.data();
    const int nnz = static_cast<int>(nz_.size());
    double* t = t_.data();
    const std::size_t w = w_;
    auto update = [&](int i) {
      if (i == pr) return;
      double* row = t + static_cast<std::size_t>(i) * w;
      const double f = row[pc];
      if (f == 0) return;
      for (int q = 0; q < nnz; ++q) row[nz[q]] -= f * prow[nz[q]];
      row[pc] = 0;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < total; ++i) update(i);
    } else {
      for (int i = 0; i < total; ++i) update(i);
    }
    basis_[pr] = pc;
  }

 private:
  int m_, n_;
  std::size_t w_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<int> nz_;
};

// splitmix64 step, used to derive per-restart seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_abT(double a, double b, double T) {
  if (!(a > 0) || !(b > 0) || !(T > 0)) throw DomainError("a, b, T must be positive");
}

}  // namespace

LpSolution solve_lp(const DenseLp& lp, Exec exec, int max_iterations) {
  if (lp.rows <= 0 || lp.cols <= 0) throw DomainError("empty LP");
  if (lp.A.size() != static_cast<std::size_t>(lp.rows) * lp.cols ||
      lp.rhs.size() != static_cast<std::size_t>(lp.rows) || lp.c.size() != static_cast<std::size_t>(lp.cols))
    throw DomainError("LP dimensions do not match");
  for (double r : lp.rhs)
    if (!(r >= 0)) throw DomainError("LP right-hand side must be nonnegative");
  if (max_iterations <= 0) max_iterations = 20 * (lp.rows + lp.cols) + 1000;

  Tableau tab(lp);
  LpSolution sol;
  int degenerate = 0;
  for (;;) {
    const bool bland = degenerate >= kDegenerateRun;
    const int pc = tab.entering(bland);
    if (pc < 0) break;
    const int pr = tab.leaving(pc);
    if (pr < 0) throw SolverFailure("LP is unbounded");
    if (sol.iterations >= max_iterations)
      throw SolverFailure("simplex iteration cap of " + std::to_string(max_iterations) + " exceeded");
    const bool stalled = tab.at(pr, tab.vars()) <= kPivotEps * 1e-3;
    degenerate = stalled ? degenerate + 1 : 0;
    if (bland) ++sol.bland_iterations;
    tab.pivot(pr, pc, exec);
    ++sol.iterations;
  }
  sol.value = tab.at(tab.rows(), tab.vars());
  sol.x.assign(lp.cols, 0.0);
  for (int i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] < lp.cols) sol.x[tab.basis()[i]] = tab.at(i, tab.vars());
  return sol;
}

PointwiseLp lp_max_pointwise_derivative(double a, double b, double T, double t0, int M, Exec exec) {
  check_abT(a, b, T);
  if (M < 50) throw DomainError("M must be >= 50");
  if (t0 < 0 || t0 > T) throw DomainError("t0 must lie in [0, T]");
  PointwiseLp out;
  out.M = M;
  out.h = T / M;
  out.j = static_cast<int>(std::lround(t0 / out.h));
  const int N = M + 1;  // variables w_i = v_i + a in [0, 2a]
  DenseLp lp;
  lp.cols = N;
  lp.rows = N + 2 * (M - 1);
  lp.A.assign(static_cast<std::size_t>(lp.rows) * N, 0.0);
  lp.rhs.assign(lp.rows, 0.0);
  lp.c.assign(N, 0.0);
  auto A = [&](int r, int c) -> double& { return lp.A[static_cast<std::size_t>(r) * N + c]; };
  for (int i = 0; i < N; ++i) {
    A(i, i) = 1;
    lp.rhs[i] = 2 * a;
  }
  const double curv = b * out.h * out.h;
  for (int i = 1; i < M; ++i) {
    const int r = N + 2 * (i - 1);
    A(r, i - 1) = 1, A(r, i) = -2, A(r, i + 1) = 1;
    A(r + 1, i - 1) = -1, A(r + 1, i) = 2, A(r + 1, i + 1) = -1;
    lp.rhs[r] = lp.rhs[r + 1] = curv;
  }
  const double s = 1 / (2 * out.h);
  if (out.j == 0) {
    lp.c[0] = -3 * s, lp.c[1] = 4 * s, lp.c[2] = -s;
  } else if (out.j == M) {
    lp.c[M] = 3 * s, lp.c[M - 1] = -4 * s, lp.c[M - 2] = s;
  } else {
    lp.c[out.j + 1] = s, lp.c[out.j - 1] = -s;
  }
  const LpSolution sol = solve_lp(lp, exec);
  out.value = sol.value;
  out.iterations = sol.iterations;
  out.v.resize(N);
  for (int i = 0; i < N; ++i) out.v[i] = sol.x[i] - a;
  return out;
}

// ---- bang-bang controls ----

namespace {

struct Piece {
  double len, f, p, acc;
};

std::vector<Piece> control_pieces(const BangBangControl& u) {
  std::vector<Piece> out;
  double f = u.f0, p = u.fp0, t = 0;
  double acc = u.initial_sign * u.b;
  std::vector<double> ends = u.switches;
  ends.push_back(u.T);
  for (double e : ends) {
    const double len = e - t;
    if (len > 0) {
      out.push_back({len, f, p, acc});
      f += p * len + acc * len * len / 2;
      p += acc * len;
      t = e;
    }
    acc = -acc;
  }
  return out;
}

// max |f| on one quadratic piece
double piece_sup(const Piece& q) {
  double m = std::max(std::abs(q.f), std::abs(q.f + q.p * q.len + q.acc * q.len * q.len / 2));
  const double tv = -q.p / q.acc;
  if (tv > 0 && tv < q.len) m = std::max(m, std::abs(q.f + q.p * tv + q.acc * tv * tv / 2));
  return m;
}

// int |f'| on one piece; f' is linear
double piece_tv(const Piece& q) {
  const double p1 = q.p + q.acc * q.len;
  if ((q.p >= 0) == (p1 >= 0)) return std::abs(q.p + p1) / 2 * q.len;
  const double tz = -q.p / q.acc;
  return (std::abs(q.p) * tz + std::abs(p1) * (q.len - tz)) / 2;
}

}  // namespace

double control_total_variation(const BangBangControl& u) {
  double s = 0;
  for (const Piece& q : control_pieces(u)) s += piece_tv(q);
  return s;
}

double control_sup_abs(const BangBangControl& u) {
  double s = 0;
  for (const Piece& q : control_pieces(u)) s = std::max(s, piece_sup(q));
  return s;
}

Spline control_to_spline(const BangBangControl& u) {
  std::vector<double> knots{0.0}, nth;
  double acc = u.initial_sign * u.b;
  std::vector<double> ends = u.switches;
  ends.push_back(u.T);
  for (double e : ends) {
    if (e - knots.back() > kMinKnotGap) {
      knots.push_back(e);
      nth.push_back(acc);
    } else if (e == u.T && knots.size() > 1) {
      knots.back() = e;
    }
    acc = -acc;
  }
  Spline f = spline_from_nth_derivative<double>(knots, {u.f0, u.fp0}, nth);
  if (u.scale != 1) f = transform(f, 0.0, 1.0, u.scale);
  return f;
}

BangBangSearch bangbang_sigma1_search(double a, double b, double T, int max_switches, int restarts,
                                      std::uint64_t seed, Exec exec) {
  check_abT(a, b, T);
  if (max_switches < 0) throw DomainError("max_switches must be >= 0");
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  // unit problem: a = b = 1 on [0, Tu]; total variation scales by a
  const double Tu = T * std::sqrt(b / a);

  // x = (f0, f'0, m + 1 log-gaps)
  auto decode = [&](const std::vector<double>& x, int sign) {
    const int m = static_cast<int>(x.size()) - 3;
    BangBangControl u;
    u.T = Tu;
    u.a = u.b = 1;
    u.f0 = std::tanh(x[0]);
    u.fp0 = x[1];
    u.initial_sign = sign;
    double total = 0;
    std::vector<double> w(m + 1);
    for (int i = 0; i <= m; ++i) total += (w[i] = std::exp(std::clamp(x[2 + i], -30.0, 30.0)));
    double acc = 0;
    for (int i = 0; i < m; ++i) {
      acc += w[i];
      u.switches.push_back(std::min(Tu, Tu * acc / total));
    }
    const double sup = control_sup_abs(u);
    u.scale = sup > 1 ? 1 / sup : 1;
    return u;
  };
  auto score = [&](const BangBangControl& u) { return control_total_variation(u) * u.scale; };

  struct Run {
    double value = -1;
    BangBangControl u;
    int evals = 0;
  };
  std::vector<Run> runs(restarts);

  auto one = [&](int r) {
    std::mt19937_64 rng(mix(seed ^ mix(static_cast<std::uint64_t>(r))));
    std::normal_distribution<double> nd(0, 1);
    // restarts cycle through both initial signs and every switch count up to the cap
    const int sign = r % 2 == 0 ? 1 : -1;
    const int dim = 3 + (r / 2) % (max_switches + 1);
    std::vector<double> x0(dim);
    for (double& v : x0) v = nd(rng);
    Run run;
    auto f = [&](const std::vector<double>& x) {
      ++run.evals;
      const BangBangControl u = decode(x, sign);
      const double v = score(u);
      if (v > run.value) {
        run.value = v;
        run.u = u;
      }
      return -v;
    };
    // Nelder-Mead
    auto nelder_mead = [&](std::vector<double> start, double step, int max_evals) {
      std::vector<std::vector<double>> s(dim + 1, start);
      std::vector<double> fv(dim + 1);
      for (int i = 0; i < dim; ++i) s[i + 1][i] += step;
      for (int i = 0; i <= dim; ++i) fv[i] = f(s[i]);
      int used = dim + 1;
      std::vector<int> idx(dim + 1);
      while (used < max_evals) {
        for (int i = 0; i <= dim; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int p, int q) { return fv[p] < fv[q]; });
        if (std::abs(fv[idx[dim]] - fv[idx[0]]) < 1e-13) break;
        std::vector<double> c(dim, 0.0);
        for (int i = 0; i < dim; ++i)
          for (int d = 0; d < dim; ++d) c[d] += s[idx[i]][d] / dim;
        const int worst = idx[dim];
        auto along = [&](double t) {
          std::vector<double> y(dim);
          for (int d = 0; d < dim; ++d) y[d] = c[d] + t * (s[worst][d] - c[d]);
          return y;
        };
        std::vector<double> xr = along(-1);
        const double fr = f(xr);
        ++used;
        if (fr < fv[idx[0]]) {
          std::vector<double> xe = along(-2);
          const double fe = f(xe);
          ++used;
          if (fe < fr) s[worst] = xe, fv[worst] = fe;
          else s[worst] = xr, fv[worst] = fr;
        } else if (fr < fv[idx[dim - 1]]) {
          s[worst] = xr, fv[worst] = fr;
        } else {
          std::vector<double> xc = fr < fv[worst] ? along(-0.5) : along(0.5);
          const double fc = f(xc);
          ++used;
          if (fc < std::min(fr, fv[worst])) {
            s[worst] = xc, fv[worst] = fc;
          } else {
            for (int i = 1; i <= dim; ++i) {
              for (int d = 0; d < dim; ++d) s[idx[i]][d] = s[idx[0]][d] + 0.5 * (s[idx[i]][d] - s[idx[0]][d]);
              fv[idx[i]] = f(s[idx[i]]);
              ++used;
            }
          }
        }
      }
      int best = 0;
      for (int i = 1; i <= dim; ++i)
        if (fv[i] < fv[best]) best = i;
      return s[best];
    };
    // pattern search over the coordinate axes plus random unit directions, which can
    // follow ridges where several wall contacts are active
    auto polish = [&](std::vector<double> x) {
      double fx = f(x);
      std::vector<std::vector<double>> dirs;
      for (int d = 0; d < dim; ++d) {
        dirs.emplace_back(dim, 0.0);
        dirs.back()[d] = 1;
      }
      for (int k = 0; k < 2 * dim; ++k) {
        std::vector<double> v(dim);
        double norm = 0;
        for (double& c : v) {
          c = nd(rng);
          norm += c * c;
        }
        for (double& c : v) c /= std::sqrt(norm);
        dirs.push_back(std::move(v));
      }
      for (double step = 0.1; step > 1e-10; step /= 2) {
        bool moved = true;
        // the score can creep up along unbounded directions; cap the sweeps
        for (int sweep = 0; moved && sweep < 50; ++sweep) {
          moved = false;
          for (const auto& v : dirs)
            for (double sgn : {1.0, -1.0}) {
              std::vector<double> y = x;
              for (int d = 0; d < dim; ++d) y[d] += sgn * step * v[d];
              const double fy = f(y);
              if (fy < fx) {
                x = y, fx = fy;
                moved = true;
              }
            }
        }
      }
      return x;
    };
    std::vector<double> x = nelder_mead(x0, 1.0, 3000);
    for (int pass = 0; pass < 2; ++pass) {
      x = nelder_mead(x, 0.05, 2000);
      x = polish(x);
    }
    runs[r] = run;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) one(r);
  } else {
    for (int r = 0; r < restarts; ++r) one(r);
  }

  BangBangSearch out;
  int best = 0;
  for (int r = 0; r < restarts; ++r) {
    out.evaluations += runs[r].evals;
    if (runs[r].value > runs[best].value) best = r;
  }
  if (!(runs[best].value >= 0)) throw SolverFailure("bang-bang search found no member");
  // back to L_2(a, b; [0, T])
  BangBangControl u = runs[best].u;
  const double ratio = std::sqrt(a / b);
  u.T = T;
  u.a = a;
  u.b = b;
  u.f0 *= a;
  u.fp0 *= std::sqrt(a * b);
  for (double& s : u.switches) s *= ratio;
  out.control = u;
  out.value = control_total_variation(u) * u.scale;
  return out;
}

Spline random_member(double a, double b, double T, std::uint64_t seed) {
  check_abT(a, b, T);
  std::mt19937_64 rng(mix(seed));
  std::uniform_real_distribution<double> U(0, 1);
  const double Tu = T * std::sqrt(b / a);
  // unit class; the wall-safety invariant is f + p|p|/2 in [-1, 1]
  double f = 2 * U(rng) - 1;
  const double pmax_up = std::sqrt(2 * (1 - f)), pmax_down = std::sqrt(2 * (1 + f));
  double p = -pmax_down + U(rng) * (pmax_up + pmax_down);
  const double f0 = f, p0 = p;
  std::vector<double> knots{0.0}, nth;
  auto run = [&](double len, double acc) {
    if (len <= 0) return;
    len = std::min(len, Tu - knots.back());
    if (len <= 1e-9) {
      if (Tu - knots.back() <= 1e-9) knots.back() = Tu;
      return;
    }
    knots.push_back(knots.back() + len);
    nth.push_back(acc);
    f += p * len + acc * len * len / 2;
    p += acc * len;
  };
  while (Tu - knots.back() > 1e-9) {
    const double s = U(rng) < 0.5 ? 1.0 : -1.0;
    double d = 0.05 + 1.5 * U(rng);
    // moving against s first: the stopping point does not move
    if (s * p < 0) {
      const double to_rest = std::abs(p);
      if (d <= to_rest) {
        run(d, s);
        continue;
      }
      run(to_rest, s);
      p = 0;
      d -= to_rest;
    }
    // accelerating toward the wall s: go until the stopping point reaches it, then land
    const double sp = s * p, sf = s * f;
    const double q = std::sqrt(std::max(0.0, 1 - sf + sp * sp / 2));
    const double free = q - sp;
    if (free <= 1e-9) {
      run(d, -s);
      continue;
    }
    if (d <= free) {
      run(d, s);
      continue;
    }
    run(free, s);
    run(std::abs(p), -s);  // parabolic landing at f = s with f' = 0
    if (std::abs(p) < 1e-12) p = 0;
  }
  if (knots.size() < 2) knots.push_back(Tu), nth.push_back(1);
  knots.back() = Tu;
  Spline g = spline_from_nth_derivative<double>(knots, {f0, p0}, nth);
  const double sup = sup_abs(g);
  if (sup > 1) g = transform(g, 0.0, 1.0, 1 / sup);
  return transform(g, 0.0, std::sqrt(b / a), a);
}

}  // namespace landau
