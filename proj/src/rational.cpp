#include "landau/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

std::string format_rational(const Rational& r) {
  const BigInt d = denominator(r);
  if (d == 1) return numerator(r).str();
  return numerator(r).str() + "/" + d.str();
}

namespace {

BigInt parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + s);
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

// "12.375" or "-0.5"
Rational parse_decimal(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_int(s));
  const bool neg = !s.empty() && s[0] == '-';
  std::string ip = s.substr(0, dot);
  std::string fp = s.substr(dot + 1);
  if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
  if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad decimal: " + s);
  BigInt scale = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
  Rational frac(BigInt(fp), scale);
  Rational whole(parse_int(ip));
  return neg ? whole - frac : whole + frac;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  BigInt p = parse_int(s.substr(0, slash));
  BigInt q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(p, q);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m 2^e, 0.5 <= |m| < 1
  long long im = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r{BigInt(im)};
  BigInt p2 = BigInt(1) << (e >= 0 ? e : -e);
  return e >= 0 ? Rational(r * p2) : Rational(r / p2);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace landau
