#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sigfrac/errors.hpp"

namespace sigfrac {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from a numerator/denominator pair
// go through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(Errc::BadParameters, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Always "num/den", integers included ("2/1").
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  Rational r;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      r = Rational(Integer(s, 10));
    } else {
      Integer num(s.substr(0, slash), 10);
      Integer den(s.substr(slash + 1), 10);
      if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
      r = Rational(num, den);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  }
  return r;
}

}  // namespace sigfrac
