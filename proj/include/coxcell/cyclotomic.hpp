#pragma once

// Exact cyclotomic arithmetic.  A CycloNumber is a residue in
// Q[x]/(Phi_n(x)) written in the power basis 1, z, ..., z^{phi(n)-1} where
// z is the class of x (a primitive n-th root of unity) and Phi_n is the
// n-th cyclotomic polynomial.  Phi_n is obtained by iterated exact division
// of x^n - 1 by the moduli of the proper divisors of n, and inverses come
// from the extended Euclidean algorithm over Q[x] (Phi_n is irreducible, so
// every nonzero residue is a unit).
//
// Arithmetic is defined between equal conductors only; mixing conductors
// throws.  Promotion is explicit via promoted(new_conductor), which maps
// z_n to z_N^{N/n}.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxcell/int_poly.hpp"
#include "coxcell/rational.hpp"

namespace coxcell {

inline long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline const IntPoly& cyclotomic_modulus(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_modulus: n must be positive");
  static std::map<long, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Fill divisors in ascending order: every divisor of d | n also divides n,
  // so each Phi_d below only needs entries already present.
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    // x^d - 1 divided by the Phi_e of all proper divisors e of d.
    IntPoly num = IntPoly::monomial(d) - IntPoly(BigInt(1));
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = num.divide_exact(cache.at(e));
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

namespace detail {

// Dense rational polynomials, just enough for reduction mod Phi_n and the
// extended Euclidean inverse.  Coefficient vector has no trailing zeros.
using QPoly = std::vector<Rational>;

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_from_int_poly(const IntPoly& p) {
  QPoly r;
  for (auto& [d, c] : p.coeffs()) {
    if (static_cast<size_t>(d) >= r.size()) r.resize(d + 1, Rational(0));
    r[d] = Rational(c);
  }
  return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

inline QPoly qp_scale(QPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  qp_trim(a);
  return a;
}

// a mod b, b nonzero.
inline QPoly qp_rem(QPoly a, const QPoly& b) {
  qp_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    qp_trim(a);
  }
  return a;
}

// Returns (quotient, remainder).
inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  qp_trim(a);
  QPoly q;
  if (a.size() >= b.size() && !a.empty()) q.resize(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    qp_trim(a);
  }
  qp_trim(q);
  return {std::move(q), std::move(a)};
}

// u with u*a == 1 mod m, for gcd(a, m) = 1.
inline QPoly qp_inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid: maintain r0 = u0*a mod m, r1 = u1*a mod m.
  QPoly r0 = m, r1 = a, u0 = {}, u1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = qp_divmod(r0, r1);
    QPoly u2 = qp_sub(u0, qp_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.size() != 1) throw std::domain_error("inverse: gcd not constant");
  return qp_scale(u0, Rational(1) / r0[0]);
}

}  // namespace detail

class CycloNumber {
 public:
  CycloNumber() : conductor_(1), coeffs_(1, Rational(0)) {}

  CycloNumber(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor_ < 1) throw std::invalid_argument("conductor must be positive");
    if (coeffs_.size() != static_cast<size_t>(euler_phi(conductor_)))
      throw std::invalid_argument("coefficient vector has wrong length");
  }

  static CycloNumber from_rational(const Rational& r, long conductor = 1) {
    CycloNumber c = zero(conductor);
    c.coeffs_[0] = r;
    return c;
  }
  static CycloNumber zero(long conductor) {
    return CycloNumber(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
  }
  static CycloNumber one(long conductor) { return from_rational(Rational(1), conductor); }
  // z^k in Q(z_n), any integer k.
  static CycloNumber root_power(long conductor, long k) {
    k %= conductor;
    if (k < 0) k += conductor;
    detail::QPoly p(k + 1, Rational(0));
    p[k] = 1;
    return reduced(conductor, std::move(p));
  }
  static CycloNumber zeta(long conductor) { return root_power(conductor, 1); }

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  // Only meaningful when is_rational().
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value");
    return coeffs_[0];
  }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    a.require_same_field(b);
    return a.coeffs_ == b.coeffs_;
  }

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    a.require_same_field(b);
    CycloNumber r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    a.require_same_field(b);
    CycloNumber r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }
  friend CycloNumber operator-(const CycloNumber& a) {
    CycloNumber r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.require_same_field(b);
    detail::QPoly pa(a.coeffs_.begin(), a.coeffs_.end());
    detail::QPoly pb(b.coeffs_.begin(), b.coeffs_.end());
    return reduced(a.conductor_, detail::qp_mul(pa, pb));
  }
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  CycloNumber inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    detail::QPoly a(coeffs_.begin(), coeffs_.end());
    detail::qp_trim(a);
    auto m = detail::qp_from_int_poly(cyclotomic_modulus(conductor_));
    return reduced(conductor_, detail::qp_inverse_mod(a, m));
  }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
    return a * b.inverse();
  }

  // Explicit embedding Q(z_n) -> Q(z_N): z_n |-> z_N^{N/n}.  Requires n | N.
  CycloNumber promoted(long new_conductor) const {
    if (new_conductor % conductor_ != 0)
      throw std::invalid_argument("promotion requires old conductor | new conductor");
    if (new_conductor == conductor_) return *this;
    long e = new_conductor / conductor_;
    CycloNumber r = zero(new_conductor);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      CycloNumber term = root_power(new_conductor, e * static_cast<long>(i));
      for (auto& c : term.coeffs_) c *= coeffs_[i];
      r += term;
    }
    return r;
  }

  CycloNumber zero_like() const { return zero(conductor_); }
  CycloNumber one_like() const { return one(conductor_); }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += to_string(coeffs_[i]);
    }
    return s + "]@" + std::to_string(conductor_);
  }

 private:
  static CycloNumber reduced(long conductor, detail::QPoly p) {
    auto m = detail::qp_from_int_poly(cyclotomic_modulus(conductor));
    p = detail::qp_rem(std::move(p), m);
    std::vector<Rational> coeffs(euler_phi(conductor), Rational(0));
    for (size_t i = 0; i < p.size(); ++i) coeffs[i] = p[i];
    return CycloNumber(conductor, std::move(coeffs));
  }

  void require_same_field(const CycloNumber& o) const {
    if (conductor_ != o.conductor_)
      throw std::invalid_argument(
          "conductor mismatch: " + std::to_string(conductor_) + " vs " +
          std::to_string(o.conductor_) + " (promotion is explicit)");
  }

  long conductor_;
  std::vector<Rational> coeffs_;
};

// 2cos(k*pi/m) as z^{ek} + z^{-ek} in Q(z_conductor), e = conductor/(2m).
inline CycloNumber two_cos(long k, long m, long conductor) {
  if (m < 2) throw std::invalid_argument("two_cos: m must be >= 2");
  if (conductor % (2 * m) != 0)
    throw std::invalid_argument("two_cos: conductor not divisible by 2m");
  long e = conductor / (2 * m);
  return CycloNumber::root_power(conductor, e * k) +
         CycloNumber::root_power(conductor, -e * k);
}

}  // namespace coxcell
