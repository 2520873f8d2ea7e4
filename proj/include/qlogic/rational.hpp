#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlogic {

using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

// Accepts an integer, "p/q", or a finite decimal such as "-0.25". Throws
// ParseError otherwise.
Rational parse_rational(const std::string& text);

}  // namespace qlogic
