#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace alexq {

/// Exact arbitrary-precision rational; distances never touch floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "p/q" and "-p[/q]" with decimal digits. The result is
/// reduced. Throws ErrorCode::Argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

}  // namespace alexq
