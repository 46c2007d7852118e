#include "landau/bound.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"
#include "landau/landau2.hpp"
#include "landau/landaun.hpp"
#include "landau/peano.hpp"

namespace landau {

const char* status_name(Status s) {
  switch (s) {
    case Status::Exact: return "Exact";
    case Status::UpperBound: return "UpperBound";
    case Status::Interval: return "Interval";
    case Status::OracleApprox: return "OracleApprox";
  }
  return "?";
}

namespace {

BoundResult exact(double v, std::string provenance) {
  BoundResult r;
  r.value = r.lo = r.hi = v;
  r.status = Status::Exact;
  r.provenance = std::move(provenance);
  return r;
}

}  // namespace

BoundResult compute_bound(const BoundQuery& q) {
  if (q.n < 2) throw DomainError("n must be >= 2");
  if (q.k < 0 || q.k > q.n) throw DomainError("k must satisfy 0 <= k <= n");
  if (!(q.a > 0) || !(q.b > 0)) throw DomainError("a and b must be positive");
  const Segment* seg = std::get_if<Segment>(&q.domain);
  if (seg && !(seg->T > 0)) throw DomainError("segment length T must be positive");
  if (q.t0 && !seg) throw DomainError("t0 is only meaningful on a segment");
  if (q.t0 && (q.n != 2 || q.k != 1)) throw Unsupported("pointwise bounds exist for n = 2, k = 1 only");

  if (q.k == 0) return exact(q.a, "definition:k=0");
  if (q.k == q.n) return exact(q.b, "definition:k=n");

  const double lam = static_cast<double>(q.k) / q.n;
  const double scale = std::pow(q.a, 1 - lam) * std::pow(q.b, lam);

  if (q.n == 2) {
    if (q.t0) return sigma_pointwise({*q.t0, seg->T, q.a, q.b});
    if (seg) return sigma_inf(q.a, q.b, seg->T);
    if (std::holds_alternative<HalfLine>(q.domain)) return sigma_inf_half_line(q.a, q.b);
    return sigma_inf_line(q.a, q.b);
  }

  if (std::holds_alternative<FullLine>(q.domain))
    return exact(kolmogorov_bound(q.n, q.k, q.a, q.b), "kolmogorov:whole_line");

  if (std::holds_alternative<HalfLine>(q.domain)) {
    const CnkBracket c = cnk_bracket(q.n, q.k);
    if (c.exact) return exact(*c.exact * scale, q.n == 3 ? "sato:half_line" : "landau:half_line");
    BoundResult r;
    r.status = Status::Interval;
    r.lo = c.lower * scale;
    r.hi = r.value = c.upper * scale;
    r.provenance = c.upper == c.matorin ? "cnk:matorin" : "cnk:malliavin";
    r.note = "lower end is the whole-line constant; the Stechkin shape carries an unknown factor";
    return r;
  }

  if (q.n == 3) {
    const SatoResult s = sato_segment(q.k, q.a, q.b, seg->T);
    return exact(s.value(q.k), s.regime == SatoRegime::Short ? "sato:short" : "sato:long");
  }

  if (q.n > 12) throw Unsupported("segment certificates support n <= 12");
  const KernelCertificate cert = vandermonde_certificate(q.n, q.k);
  BoundResult r;
  r.status = Status::UpperBound;
  r.value = r.hi = cert.bound(q.a, q.b, seg->T);
  r.lo = kolmogorov_bound(q.n, q.k, q.a, q.b);
  r.provenance = "peano:vandermonde";
  r.note = "lower end is the whole-line constant";
  return r;
}

}  // namespace landau
