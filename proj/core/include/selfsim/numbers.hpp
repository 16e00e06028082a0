#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace selfsim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Floor division and remainder with 0 <= r < d for d > 0.
void floor_divmod(const BigInt& a, const BigInt& d, BigInt& q, BigInt& r);

}  // namespace selfsim
