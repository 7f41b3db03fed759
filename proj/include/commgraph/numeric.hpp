#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace commgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "num/den" in lowest terms; integers still carry "/1".
inline std::string fraction_string(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline std::string fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace commgraph
