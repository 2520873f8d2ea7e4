#include "qlogic/rational.hpp"

#include <regex>

#include "qlogic/error.hpp"

namespace qlogic {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  static const std::regex fraction(R"((-?\d+)(?:/(\d+))?)");
  static const std::regex decimal(R"((-?)(\d+)\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    const cpp_int num(m[1].str());
    const cpp_int den(m[2].matched ? m[2].str() : "1");
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (std::regex_match(text, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    cpp_int den = 1;
    for (long i = 0; i < m[3].length(); ++i) den *= 10;
    Rational r(cpp_int(digits), den);
    return m[1].length() ? Rational(-r) : r;
  }
  throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
}

}  // namespace qlogic
