#pragma once

#include <json.hpp>
#include <optional>

#include "landau/pwpoly.hpp"

namespace landau {

// {"knots":[...],"pieces":[[c0,c1,...],...],"n":k} plus optional "a","b".
// Exact splines write every number as a "p/q" string.
nlohmann::json spline_to_json(const Spline& f);
nlohmann::json spline_to_json(const ExactSpline& f);
nlohmann::json spline_to_json(const AnySpline& f);

struct ParsedSpline {
  AnySpline spline;
  std::optional<double> a, b;
};

// Exact when every knot and coefficient is a string or an integer literal.
// Throws StructuralError on malformed input.
ParsedSpline spline_from_json(const nlohmann::json& j);

}  // namespace landau
