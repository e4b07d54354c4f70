#pragma once

// Sparse integer Laurent polynomials in v, where v stands for q^{1/2}:
// the monomial v^i represents q^{i/2}.  A plain q-polynomial embeds with
// even v-degrees (see from_q_poly).  Zero coefficients are never stored.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "coxcell/int_poly.hpp"
#include "coxcell/rational.hpp"

namespace coxcell {

class LaurentPoly {
 public:
  using Map = std::map<long, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(const BigInt& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }
  static LaurentPoly monomial(long degree, BigInt coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[degree] = std::move(coeff);
    return p;
  }
  // q^j |-> v^{2j}
  static LaurentPoly from_q_poly(const IntPoly& p) {
    LaurentPoly r;
    for (auto& [d, c] : p.coeffs()) r.coeffs_[2 * d] = c;
    return r;
  }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(long degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  std::optional<long> lowest_degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.begin()->first;
  }
  std::optional<long> highest_degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }

  void add_term(long degree, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(degree, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto& [d, c] : a.coeffs_) r.coeffs_[d] = -c;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [da, ca] : a.coeffs_)
      for (auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // v^k * p
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
    return r;
  }
  // v |-> v^{-1}
  LaurentPoly mirrored() const {
    LaurentPoly r;
    for (auto& [d, c] : coeffs_) r.coeffs_[-d] = c;
    return r;
  }

  BigInt evaluate_at_one() const {
    BigInt s = 0;
    for (auto& [d, c] : coeffs_) s += c;
    return s;
  }

  std::string str(const std::string& var = "v") const {
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
