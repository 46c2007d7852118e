#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace landau {

// Expression templates off: values behave like plain arithmetic types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" or "p" (denominator 1 is printed without a slash).
std::string format_rational(const Rational& r);

// Accepts "p/q", "p", "-p/q". Throws std::invalid_argument on junk or zero denominator.
Rational parse_rational(const std::string& s);

// Exact binary value of a finite double.
Rational rational_from_double(double x);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
Rational pow_rational(const Rational& base, unsigned e);

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace landau
