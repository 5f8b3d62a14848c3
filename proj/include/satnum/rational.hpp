#pragma once

#include <boost/rational.hpp>
#include <string>

namespace satnum {

// Compare against Rational(x), never a bare integer: under C++20 the mixed
// operator== of boost 1.74 picks its own reversed form and recurses.
using Rational = boost::rational<long long>;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long ceil_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

inline Rational binom2(long long n) { return Rational(n * (n - 1) / 2); }

}  // namespace satnum
