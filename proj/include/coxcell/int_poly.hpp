#pragma once

// Sparse integer polynomials in q, exponents >= 0.  Hosts the Kazhdan-Lusztig
// polynomials P_{y,w} and the cyclotomic moduli.  No zero coefficient is ever
// stored, so the zero polynomial is the empty map.

#include <map>
#include <stdexcept>
#include <string>

#include "coxcell/rational.hpp"

namespace coxcell {

class IntPoly {
 public:
  using Map = std::map<long, BigInt>;

  IntPoly() = default;
  explicit IntPoly(const BigInt& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }
  static IntPoly monomial(long degree, BigInt coeff = 1) {
    if (degree < 0) throw std::invalid_argument("IntPoly exponent < 0");
    IntPoly p;
    if (coeff != 0) p.coeffs_[degree] = std::move(coeff);
    return p;
  }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }
  long degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
  }
  BigInt coeff(long degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }
  BigInt constant_term() const { return coeff(0); }

  void add_term(long degree, const BigInt& c) {
    if (degree < 0) throw std::invalid_argument("IntPoly exponent < 0");
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(degree, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  IntPoly& operator+=(const IntPoly& o) {
    for (auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    for (auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (auto& [da, ca] : a.coeffs_)
      for (auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
    return r;
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  BigInt evaluate_at_one() const {
    BigInt s = 0;
    for (auto& [d, c] : coeffs_) s += c;
    return s;
  }

  // Quotient of *this by a monic divisor; throws unless the division is exact.
  IntPoly divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (divisor.coeffs_.rbegin()->second != 1)
      throw std::invalid_argument("divide_exact requires a monic divisor");
    IntPoly rem = *this, quot;
    long dd = divisor.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
      long shift = rem.degree() - dd;
      BigInt lead = rem.coeffs_.rbegin()->second;
      quot.add_term(shift, lead);
      for (auto& [d, c] : divisor.coeffs_) rem.add_term(d + shift, -lead * c);
    }
    if (!rem.is_zero()) throw std::domain_error("polynomial division not exact");
    return quot;
  }

  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [d, c] : coeffs_) {
      if (!s.empty() && c > 0) s += "+";
      if (d == 0)
        s += c.get_str();
      else {
        if (c == -1)
          s += "-";
        else if (c != 1)
          s += c.get_str() + "*";
        s += var;
        if (d != 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

 private:
  Map coeffs_;
};

}  // namespace coxcell
