#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace l0t {

// et_off: plain value semantics. Lazy expression templates capture
// references to temporaries, which is unsafe under auto and inside Eigen
// expressions; exactness is unaffected.
using Rational = boost::multiprecision::number<boost::multiprecision::backends::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p" or "p/q" with q > 0. Anything else throws ErrorKind::Parse.
Rational parse_rational(const std::string& text);

/// Canonical form "p/q"; integers print with denominator 1 ("3/1").
std::string format_rational(const Rational& x);

double to_double(const Rational& x);

/// Exact binary expansion of a finite double.
Rational rational_from_double(double x);

/// The exact square root when x is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& x);

inline Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

} // namespace l0t
