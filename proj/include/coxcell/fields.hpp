#pragma once

// Field contexts used by the generic linear algebra: a field object knows how
// to mint zero/one and to invert, so matrix code can be written once for Q
// and for the cyclotomic fields.  ExactScalar is the tagged union used at
// the JSON/CLI boundary.

#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

#include "coxcell/cyclotomic.hpp"
#include "coxcell/rational.hpp"

namespace coxcell {

struct RationalField {
  using Scalar = Rational;
  Scalar zero() const { return Rational(0); }
  Scalar one() const { return Rational(1); }
  Scalar from_int(long n) const { return Rational(n); }
  Scalar inv(const Scalar& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    return Rational(1) / x;
  }
  static bool is_zero(const Scalar& x) { return x == 0; }
  std::string name() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct CycloField {
  long conductor = 1;

  CycloField() = default;
  explicit CycloField(long n) : conductor(n) {
    cyclotomic_modulus(n);  // validates n and warms the cache
  }

  using Scalar = CycloNumber;
  Scalar zero() const { return CycloNumber::zero(conductor); }
  Scalar one() const { return CycloNumber::one(conductor); }
  Scalar from_int(long n) const {
    return CycloNumber::from_rational(Rational(n), conductor);
  }
  Scalar inv(const Scalar& x) const { return x.inverse(); }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  std::string name() const { return "Q(zeta_" + std::to_string(conductor) + ")"; }
  friend bool operator==(const CycloField& a, const CycloField& b) {
    return a.conductor == b.conductor;
  }
};

using ExactScalar = std::variant<Rational, CycloNumber>;

inline bool scalar_is_zero(const ExactScalar& s) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
      return v == 0;
    else
      return v.is_zero();
  }, s);
}

// Compare across representations by promoting into a common cyclotomic field.
inline bool scalar_equal(const ExactScalar& a, const ExactScalar& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return std::get<Rational>(a) == std::get<Rational>(b);
  auto lift = [](const ExactScalar& s) {
    if (auto* r = std::get_if<Rational>(&s)) return CycloNumber::from_rational(*r);
    return std::get<CycloNumber>(s);
  };
  CycloNumber ca = lift(a), cb = lift(b);
  long n = std::lcm(ca.conductor(), cb.conductor());
  return ca.promoted(n) == cb.promoted(n);
}

}  // namespace coxcell
