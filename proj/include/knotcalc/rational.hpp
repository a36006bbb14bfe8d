#ifndef KNOTCALC_RATIONAL_HPP
#define KNOTCALC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace knotcalc {

/// Exact rational arithmetic for breakpoints and slopes. Desk scale:
/// numerators and denominators stay tiny, int64 is ample.
using Rational = boost::rational<long long>;

/// "p/q", or just "n" when the value is integral.
std::string to_string(const Rational& r);

/// Inverse of to_string: accepts "p/q" and "n". Throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace knotcalc

#endif
