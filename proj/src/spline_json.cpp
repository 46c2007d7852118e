#include "landau/spline_json.hpp"

namespace landau {

using nlohmann::json;

json spline_to_json(const Spline& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces) {
    json c = json::array();
    for (double v : p.coeffs()) c.push_back(v);
    if (c.empty()) c.push_back(0.0);
    pieces.push_back(c);
  }
  return {{"knots", f.knots}, {"pieces", pieces}, {"n", f.n_smooth}};
}

json spline_to_json(const ExactSpline& f) {
  json knots = json::array();
  for (const auto& k : f.knots) knots.push_back(format_rational(k));
  json pieces = json::array();
  for (const auto& p : f.pieces) {
    json c = json::array();
    for (const auto& v : p.coeffs()) c.push_back(format_rational(v));
    if (c.empty()) c.push_back("0");
    pieces.push_back(c);
  }
  return {{"knots", knots}, {"pieces", pieces}, {"n", f.n_smooth}};
}

json spline_to_json(const AnySpline& f) {
  return std::visit([](const auto& s) { return spline_to_json(s); }, f);
}

namespace {

bool exact_literal(const json& v) { return v.is_string() || v.is_number_integer(); }

Rational to_rational(const json& v) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw StructuralError(std::string("bad rational literal: ") + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  throw StructuralError("expected a rational literal");
}

double to_number(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(to_rational(v));
  throw StructuralError("expected a number");
}

}  // namespace

ParsedSpline spline_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("spline JSON must be an object");
  if (!j.contains("knots") || !j["knots"].is_array()) throw StructuralError("missing knots array");
  if (!j.contains("pieces") || !j["pieces"].is_array()) throw StructuralError("missing pieces array");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw StructuralError("missing integer n");
  const json& knots = j["knots"];
  const json& pieces = j["pieces"];
  bool exact = true;
  for (const auto& k : knots) exact = exact && exact_literal(k);
  for (const auto& p : pieces) {
    if (!p.is_array()) throw StructuralError("each piece must be a coefficient array");
    for (const auto& c : p) exact = exact && exact_literal(c);
  }
  ParsedSpline out;
  const int n = j["n"].get<int>();
  if (exact) {
    ExactSpline f;
    f.n_smooth = n;
    for (const auto& k : knots) f.knots.push_back(to_rational(k));
    for (const auto& p : pieces) {
      std::vector<Rational> c;
      for (const auto& v : p) c.push_back(to_rational(v));
      f.pieces.emplace_back(std::move(c));
    }
    validate(f);
    out.spline = std::move(f);
  } else {
    Spline f;
    f.n_smooth = n;
    for (const auto& k : knots) f.knots.push_back(to_number(k));
    for (const auto& p : pieces) {
      std::vector<double> c;
      for (const auto& v : p) c.push_back(to_number(v));
      f.pieces.emplace_back(std::move(c));
    }
    validate(f);
    out.spline = std::move(f);
  }
  if (j.contains("a")) out.a = to_number(j["a"]);
  if (j.contains("b")) out.b = to_number(j["b"]);
  return out;
}

}  // namespace landau
