#pragma once

#include <optional>
#include <string>
#include <variant>

#include "landau/pwpoly.hpp"

namespace landau {

struct Segment {
  double T;
};
struct HalfLine {};
struct FullLine {};
using Domain = std::variant<Segment, HalfLine, FullLine>;

enum class Status { Exact, UpperBound, Interval, OracleApprox };

const char* status_name(Status s);

// Bound on sup |f^{(k)}| over the class L_n(a, b; domain), optionally at a point t0.
struct BoundQuery {
  int n = 2;
  int k = 1;
  double a = 1;
  double b = 1;
  Domain domain = FullLine{};
  std::optional<double> t0;
};

struct BoundResult {
  double value = 0;
  Status status = Status::Exact;
  double lo = 0;  // equal to value unless status is Interval
  double hi = 0;
  std::optional<Spline> witness;
  std::optional<double> witness_at;  // point where |witness^{(k)}| attains value
  std::string provenance;
  std::string note;
};

// Routes to the sharpest available result:
//   n = 2: closed forms (pointwise when t0 is set, segment only);
//   line, n >= 3: Kolmogorov;
//   half-line, n >= 3: exact for n = 3, otherwise the bracket;
//   segment, n = 3: Sato; n >= 4: Vandermonde certificate with the line value as floor.
// k = 0 and k = n return a and b.
BoundResult compute_bound(const BoundQuery& q);

}  // namespace landau
