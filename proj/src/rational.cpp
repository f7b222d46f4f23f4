#include "alexq/rational.hpp"

#include <algorithm>
#include <cctype>

#include "alexq/error.hpp"

namespace alexq {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Argument, "\"" + std::string(text) + "\" is not a rational of the form p or p/q");
  }
  boost::multiprecision::cpp_int p{std::string(num)};
  boost::multiprecision::cpp_int q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::Argument, "\"" + std::string(text) + "\" has a zero denominator");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace alexq
