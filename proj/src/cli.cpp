#include "landau/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "landau/bound.hpp"
#include "landau/errors.hpp"
#include "landau/eulerspline.hpp"
#include "landau/exactnum.hpp"
#include "landau/landau2.hpp"
#include "landau/landaun.hpp"
#include "landau/oracle.hpp"
#include "landau/peano.hpp"
#include "landau/spline_json.hpp"

namespace landau {

namespace {

using nlohmann::json;

json envelope(const std::string& command, json result, json provenance, const std::string& status) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"result", std::move(result)},
          {"provenance", std::move(provenance)},
          {"status", status}};
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Join: return "join";
    case ViolationKind::Degree: return "degree";
    case ViolationKind::Value: return "value";
    case ViolationKind::Derivative: return "derivative";
  }
  return "?";
}

json report_json(const MembershipReport& r) {
  json v = json::array();
  for (const Violation& x : r.violations)
    v.push_back({{"kind", violation_name(x.kind)},
                 {"piece", x.piece},
                 {"location", x.location},
                 {"excess", x.excess},
                 {"detail", x.detail}});
  return {{"member", r.member}, {"numeric", r.numeric}, {"violations", v}};
}

struct QueryFlags {
  int n = 2;
  int k = 1;
  double a = 1;
  double b = 1;
  std::string domain = "line";
  std::optional<double> T;
  std::optional<double> t0;
  bool tv = false;
};

void add_query_flags(CLI::App* c, QueryFlags& q) {
  c->add_option("--n", q.n, "order of the top derivative")->capture_default_str();
  c->add_option("--k", q.k, "order of the bounded derivative")->capture_default_str();
  c->add_option("--a", q.a, "bound on |f|")->capture_default_str();
  c->add_option("--b", q.b, "bound on |f^(n)|")->capture_default_str();
  c->add_option("--domain", q.domain, "segment, halfline or line")
      ->check(CLI::IsMember({"segment", "halfline", "line"}))
      ->capture_default_str();
  c->add_option("--T", q.T, "segment length");
  c->add_option("--t0", q.t0, "evaluation point (segment, n = 2)");
  c->add_flag("--tv", q.tv, "total variation sigma_1 instead of the sup norm (segment, n = 2)");
}

BoundQuery to_query(const QueryFlags& f) {
  BoundQuery q;
  q.n = f.n;
  q.k = f.k;
  q.a = f.a;
  q.b = f.b;
  q.t0 = f.t0;
  if (f.domain == "segment") {
    if (!f.T) throw DomainError("--domain segment needs --T");
    q.domain = Segment{*f.T};
  } else {
    if (f.T) throw DomainError("--T applies to --domain segment only");
    q.domain = f.domain == "halfline" ? Domain{HalfLine{}} : Domain{FullLine{}};
  }
  return q;
}

Sigma1Result tv_query(const QueryFlags& f) {
  if (f.n != 2 || f.k != 1 || f.domain != "segment" || !f.T || f.t0)
    throw DomainError("--tv needs --n 2 --k 1 --domain segment --T and no --t0");
  return sigma1(f.a, f.b, *f.T);
}

json sigma1_json(const Sigma1Result& s) {
  json r = {{"value", s.exact ? *s.exact : s.upper},
            {"lo", s.lower},
            {"hi", s.upper},
            {"rule", sigma1_rule_name(s.provenance)}};
  return r;
}

std::string sigma1_status(const Sigma1Result& s) { return s.exact ? "Exact" : "Interval"; }

json bound_json(const BoundQuery& q, const BoundResult& r) {
  json out = {{"value", r.value}, {"lo", r.lo}, {"hi", r.hi}};
  if (r.witness_at) out["witness_at"] = *r.witness_at;
  if (!r.note.empty()) out["note"] = r.note;
  if (q.n >= 3 && std::holds_alternative<HalfLine>(q.domain) && q.k > 0 && q.k < q.n) {
    const CnkBracket c = cnk_bracket(q.n, q.k);
    out["bracket"] = {{"lower_whole_line", c.lower},
                      {"upper", c.upper},
                      {"matorin", c.matorin},
                      {"malliavin", c.malliavin},
                      {"stechkin_shape", c.stechkin_shape},
                      {"stechkin_shape_only", c.stechkin_shape_only},
                      {"scale", std::pow(q.a, 1 - double(q.k) / q.n) * std::pow(q.b, double(q.k) / q.n)}};
    if (c.exact) out["bracket"]["exact"] = *c.exact;
  }
  return out;
}

int cmd_bound(const QueryFlags& f, std::ostream& out) {
  if (f.tv) {
    const Sigma1Result s = tv_query(f);
    out << envelope("bound", sigma1_json(s), {std::string("sigma1:") + sigma1_rule_name(s.provenance)},
                    sigma1_status(s))
               .dump(2)
        << "\n";
    return 0;
  }
  const BoundQuery q = to_query(f);
  const BoundResult r = compute_bound(q);
  out << envelope("bound", bound_json(q, r), {r.provenance}, status_name(r.status)).dump(2) << "\n";
  return 0;
}

int cmd_extremal(const QueryFlags& f, const std::string& out_file, std::ostream& out, std::ostream& err) {
  Spline w;
  json result;
  std::string provenance, status;
  if (f.tv) {
    const Sigma1Result s = tv_query(f);
    if (!s.witness) {
      err << "no extremal is known for sigma_1 at this length\n";
      return 2;
    }
    w = *s.witness;
    result = sigma1_json(s);
    provenance = std::string("sigma1:") + sigma1_rule_name(s.provenance);
    status = sigma1_status(s);
  } else {
    const BoundQuery q = to_query(f);
    const BoundResult r = compute_bound(q);
    if (!r.witness) {
      err << "no extremal function is available for this query\n";
      return 2;
    }
    w = *r.witness;
    result = bound_json(q, r);
    provenance = r.provenance;
    status = status_name(r.status);
  }
  const MembershipReport rep = membership(w, f.n, f.a, f.b);
  if (!rep.member) {
    err << "internal error: witness failed the membership check\n";
    return 1;
  }
  json sj = spline_to_json(w);
  sj["a"] = f.a;
  sj["b"] = f.b;
  result["membership"] = report_json(rep);
  result["spline"] = sj;
  if (!out_file.empty()) {
    std::ofstream fs(out_file);
    if (!fs) throw DomainError("cannot write " + out_file);
    fs << sj.dump(2) << "\n";
  }
  out << envelope("extremal", result, {provenance}, status).dump(2) << "\n";
  return 0;
}

struct OracleFlags {
  std::string what = "lp";
  double a = 1, b = 1;
  double T = 1;
  double t0 = 0;
  int M = 400;
  int restarts = 50;
  int max_switches = -1;
  std::uint64_t seed = 1;
};

int cmd_oracle(OracleFlags o, std::ostream& out) {
  if (const char* env = std::getenv("LANDAU_SEED")) o.seed = std::stoull(env);
  json config = {{"what", o.what}, {"a", o.a}, {"b", o.b}, {"T", o.T}};
  json result;
  if (o.what == "lp") {
    const PointwiseLp lp = lp_max_pointwise_derivative(o.a, o.b, o.T, o.t0, o.M);
    const double t_snap = lp.j * lp.h;
    const double closed = sigma_pointwise({t_snap, o.T, o.a, o.b}).value;
    config.update({{"t0", o.t0}, {"t0_snapped", t_snap}, {"M", o.M}});
    result = {{"value", lp.value},
              {"closed_form", closed},
              {"discrepancy_vs_closed_form", lp.value - closed},
              {"iterations", lp.iterations},
              {"config", config}};
  } else {
    const int sw = o.max_switches >= 0 ? o.max_switches
                                       : static_cast<int>(std::ceil(o.T * std::sqrt(o.b / o.a) / std::sqrt(2.0))) + 2;
    const BangBangSearch s = bangbang_sigma1_search(o.a, o.b, o.T, sw, o.restarts, o.seed);
    const Sigma1Result c = sigma1(o.a, o.b, o.T);
    config.update({{"restarts", o.restarts}, {"max_switches", sw}, {"seed", o.seed}});
    result = {{"value", s.value}, {"evaluations", s.evaluations}, {"config", config}};
    json ctl = {{"f0", s.control.f0},
                {"fp0", s.control.fp0},
                {"initial_sign", s.control.initial_sign},
                {"switches", s.control.switches},
                {"scale", s.control.scale}};
    result["control"] = ctl;
    if (c.exact) {
      result["closed_form"] = *c.exact;
      result["discrepancy_vs_closed_form"] = s.value - *c.exact;
    } else {
      result["closed_form_interval"] = {c.lower, c.upper};
    }
  }
  out << envelope("oracle", result, {o.what == "lp" ? "oracle:lp" : "oracle:bangbang"}, "OracleApprox").dump(2)
      << "\n";
  return 0;
}

std::string rat(const Rational& r) {
  std::ostringstream s;
  s << numerator(r);
  if (denominator(r) != 1) s << "/" << denominator(r);
  return s.str();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// Rows of strings; first row is the header.
using Table = std::vector<std::vector<std::string>>;

Table make_table(const std::string& what, int max_n) {
  Table t;
  if (what == "euler-numbers") {
    t.push_back({"n", "E_n"});
    for (int n = 0; n <= max_n; ++n) t.push_back({std::to_string(n), rat(euler_number(n))});
  } else if (what == "favard") {
    t.push_back({"n", "K_n"});
    for (int n = 0; n <= max_n; ++n) t.push_back({std::to_string(n), num(favard(n))});
  } else if (what == "rn") {
    t.push_back({"n", "r_n", "s_n"});
    for (int n = 0; n <= max_n; ++n) t.push_back({std::to_string(n), rat(r_n(n)), rat(s_n(n))});
  } else if (what == "cnk") {
    t.push_back({"n", "k", "lower_whole_line", "upper", "exact", "matorin", "malliavin", "stechkin_shape"});
    for (int n = 2; n <= max_n; ++n)
      for (int k = 1; k < n; ++k) {
        const CnkBracket c = cnk_bracket(n, k);
        t.push_back({std::to_string(n), std::to_string(k), num(c.lower), num(c.upper),
                     c.exact ? num(*c.exact) : "", num(c.matorin), num(c.malliavin), num(c.stechkin_shape)});
      }
  } else if (what == "Ank") {
    t.push_back({"n", "k", "T_{n-1}^(k)(1)", "A_nk"});
    for (int n = 2; n <= max_n; ++n)
      for (int k = 1; k < n; ++k)
        t.push_back({std::to_string(n), std::to_string(k), chebyshev_deriv_at_one(n, k).str(),
                     A_nk_markov(n, k).str()});
  } else if (what == "Bnk") {
    t.push_back({"n", "k", "B_lower", "B_kallioniemi", "B_cartan", "ratio"});
    for (int n = 2; n <= max_n; ++n)
      for (int k = 1; k < n; ++k) {
        const Rational lo = B_nk_lower(n, k), ka = B_nk_kallioniemi(n, k);
        t.push_back({std::to_string(n), std::to_string(k), rat(lo), rat(ka), rat(B_nk_cartan(n, k)),
                     num(to_double(ka / lo))});
      }
  } else {
    throw DomainError("unknown table " + what);
  }
  return t;
}

void write_csv(const Table& t, std::ostream& out) {
  for (const auto& row : t) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

int cmd_table(const std::string& what, int max_n, const std::string& format, std::ostream& out) {
  const Table t = make_table(what, max_n);
  if (format == "csv") {
    write_csv(t, out);
    return 0;
  }
  json rows = json::array();
  for (std::size_t r = 1; r < t.size(); ++r) {
    json row;
    for (std::size_t c = 0; c < t[0].size(); ++c) row[t[0][c]] = t[r][c];
    rows.push_back(row);
  }
  out << envelope("table", {{"what", what}, {"rows", rows}}, {"table:" + what}, "Exact").dump(2) << "\n";
  return 0;
}

int cmd_kernel(int n, int k, double T, double x, int samples, std::ostream& out) {
  if (samples < 2) throw DomainError("--samples must be >= 2");
  if (!(T > 0) || x < 0 || x > T) throw DomainError("need T > 0 and 0 <= x <= T");
  LinearFunctional L;
  if (n == 2 && k == 1) {
    L = derivative_functional(x, T);
  } else {
    // f^(k)(x) - T^{-k} sum lambda_i(x/T) f(iT/n)
    const std::vector<Poly> lam = vandermonde_weights(n, k);
    L.T = T;
    L.n = n;
    L.terms.push_back({x, k, 1.0});
    const double s = std::pow(T, -k);
    for (int i = 0; i < n; ++i)
      L.terms.push_back({(i + 1) * T / n, 0, -s * to_double(lam[i](Rational(x / T)))});
  }
  out << "t,K\n";
  for (int i = 0; i < samples; ++i) {
    const double t = T * i / (samples - 1);
    out << num(t) << "," << num(peano_kernel(L, t).value) << "\n";
  }
  return 0;
}

int cmd_spline(const std::string& what, int n, int samples, std::ostream& out) {
  if (samples < 2) throw DomainError("--samples must be >= 2");
  // two antiperiods of each function
  double hi = 2;
  if (what == "qn") hi = 2 / std::pow(to_double(s_n(n)), 1.0 / n);
  out << "x,value\n";
  for (int i = 0; i < samples; ++i) {
    const double x = hi * i / (samples - 1);
    double v;
    if (what == "en") v = e_n(n, x);
    else if (what == "euler-spline") v = euler_spline(n, x);
    else v = q_n(n, x);
    out << num(x) << "," << num(v) << "\n";
  }
  return 0;
}

struct VerifyFlags {
  std::string file;
  bool extreme = false;
  std::optional<int> n;
  std::optional<double> a, b;
};

int cmd_verify(const VerifyFlags& v, std::ostream& out, std::ostream& err) {
  std::ifstream fs(v.file);
  if (!fs) {
    err << "cannot read " << v.file << "\n";
    return 2;
  }
  json j;
  try {
    j = json::parse(fs);
  } catch (const json::exception& e) {
    err << "parse error in " << v.file << ": " << e.what() << "\n";
    return 2;
  }
  const ParsedSpline ps = spline_from_json(j);
  const int n = v.n ? *v.n : std::visit([](const auto& s) { return s.n_smooth; }, ps.spline);
  const double a = v.a ? *v.a : ps.a.value_or(1.0);
  const double b = v.b ? *v.b : ps.b.value_or(1.0);
  const bool exact = std::holds_alternative<ExactSpline>(ps.spline);
  const MembershipReport rep = membership_any(ps.spline, n, a, b);
  json result = {{"n", n}, {"a", a}, {"b", b}, {"exact_arithmetic", exact}, {"membership", report_json(rep)}};
  bool ok = rep.member;
  if (ok && v.extreme) {
    const ExtremeVerdict e = is_extreme_point_any(ps.spline, n, a, b);
    json pts = json::array();
    for (const ContactPoint& p : e.contacts.points)
      pts.push_back({{"t", p.t}, {"sign", p.sign}, {"multiplicity", p.multiplicity}});
    json ivs = json::array();
    for (const ContactInterval& c : e.contacts.intervals) ivs.push_back({{"lo", c.lo}, {"hi", c.hi}, {"sign", c.sign}});
    result["extreme"] = {{"is_extreme", e.is_extreme},
                         {"multiplicity_sum", e.multiplicity_sum == kInfiniteMultiplicity ? json("inf")
                                                                                          : json(e.multiplicity_sum)},
                         {"contact_points", pts},
                         {"contact_intervals", ivs},
                         {"bang_bang_violations", e.condition_ii_violations}};
    ok = e.is_extreme;
  }
  result["verified"] = ok;
  out << envelope("verify", result, {v.extreme ? "verify:extreme" : "verify:membership"},
                  exact ? "Exact" : "OracleApprox")
             .dump(2)
      << "\n";
  if (!rep.member) {
    err << "not a member: " << rep.violations.size() << " violation(s)";
    if (!rep.violations.empty()) err << ", first: " << rep.violations.front().detail;
    err << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Landau-Kolmogorov derivative bounds. JSON results use envelope schema_version " +
               std::string(kSchemaVersion) +
               ": {schema_version, command, result, provenance, status}.",
               "landau"};
  app.require_subcommand(1);

  QueryFlags bq, eq;
  auto* bound = app.add_subcommand("bound", "sup of |f^(k)| over the class");
  add_query_flags(bound, bq);

  std::string extremal_out;
  auto* extremal = app.add_subcommand("extremal", "extremal function of a bound, membership-checked");
  add_query_flags(extremal, eq);
  extremal->add_option("--out", extremal_out, "also write the spline JSON to this file");

  OracleFlags of;
  auto* oracle = app.add_subcommand("oracle", "brute-force check of an n = 2 closed form");
  oracle->add_option("--what", of.what, "lp or bangbang")->check(CLI::IsMember({"lp", "bangbang"}))->capture_default_str();
  oracle->add_option("--a", of.a)->capture_default_str();
  oracle->add_option("--b", of.b)->capture_default_str();
  oracle->add_option("--T", of.T)->capture_default_str();
  oracle->add_option("--t0", of.t0, "lp only")->capture_default_str();
  oracle->add_option("--M", of.M, "lp grid size")->capture_default_str();
  oracle->add_option("--restarts", of.restarts, "bangbang restarts")->capture_default_str();
  oracle->add_option("--max-switches", of.max_switches, "bangbang switch cap, default ceil(T/sqrt 2) + 2");
  oracle->add_option("--seed", of.seed, "overridden by LANDAU_SEED")->capture_default_str();

  std::string table_what, table_format = "csv";
  int table_max_n = 8;
  auto* table = app.add_subcommand("table", "tables of constants");
  table->add_option("--what", table_what)
      ->required()
      ->check(CLI::IsMember({"favard", "euler-numbers", "rn", "cnk", "Ank", "Bnk"}));
  table->add_option("--max-n", table_max_n)->capture_default_str();
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  int kn = 2, kk = 1, ksamples = 201;
  double kT = 1, kx = 0.5;
  auto* kernel = app.add_subcommand("kernel", "Peano kernel samples as CSV");
  kernel->add_option("--n", kn)->capture_default_str();
  kernel->add_option("--k", kk)->capture_default_str();
  kernel->add_option("--T", kT)->capture_default_str();
  kernel->add_option("--x", kx)->capture_default_str();
  kernel->add_option("--samples", ksamples)->capture_default_str();

  std::string spline_what;
  int sn = 3, ssamples = 201;
  auto* spline = app.add_subcommand("spline", "Euler polynomial and spline samples as CSV");
  spline->add_option("--what", spline_what)->required()->check(CLI::IsMember({"en", "euler-spline", "qn"}));
  spline->add_option("--n", sn)->capture_default_str();
  spline->add_option("--samples", ssamples)->capture_default_str();

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "membership and extreme-point check of a spline JSON file");
  verify->add_option("--file", vf.file)->required();
  verify->add_flag("--extreme", vf.extreme);
  verify->add_option("--n", vf.n, "defaults to the file's n");
  verify->add_option("--a", vf.a, "defaults to the file's a, else 1");
  verify->add_option("--b", vf.b, "defaults to the file's b, else 1");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(bq, out);
    if (extremal->parsed()) return cmd_extremal(eq, extremal_out, out, err);
    if (oracle->parsed()) return cmd_oracle(of, out);
    if (table->parsed()) return cmd_table(table_what, table_max_n, table_format, out);
    if (kernel->parsed()) return cmd_kernel(kn, kk, kT, kx, ksamples, out);
    if (spline->parsed()) return cmd_spline(spline_what, sn, ssamples, out);
    if (verify->parsed()) return cmd_verify(vf, out, err);
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return 1;
  } catch (const NotAMember& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace landau
