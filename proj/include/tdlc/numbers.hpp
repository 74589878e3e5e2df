#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tdlc {

// All group indices are exact arbitrary-precision integers; quantities such
// as (d-1)^l or |F|^n outgrow fixed-width types quickly. Natural values are
// cpp_int kept >= 0 by construction.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_dec(const Natural& n) { return n.str(); }

inline std::string to_dec(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline Natural pow_nat(Natural base, unsigned long exp) {
  Natural r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

}  // namespace tdlc
