#pragma once

// Exact scalar substrate: arbitrary-precision integers and canonical
// rationals (gcd(|num|, den) = 1, den >= 1), provided by GMP.  The string
// form used throughout the JSON layer is "p/q".

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxcell {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const BigInt& n) { return n.get_str(); }

// Always "p/q", including "p/1": keeps emitted JSON uniform.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  BigInt n;
  if (n.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad integer literal: " + std::string(s));
  return n;
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  return make_rational(parse_bigint(s.substr(0, slash)),
                       parse_bigint(s.substr(slash + 1)));
}

}  // namespace coxcell
