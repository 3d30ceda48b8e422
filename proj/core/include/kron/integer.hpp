#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kron {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

/// Always "p/q", including integral values ("3/1").
inline std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace kron
