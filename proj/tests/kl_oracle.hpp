#pragma once

// Test-only oracle for Kazhdan-Lusztig polynomials, independent of the
// descent recursion under test.  It constructs the C basis from its defining
// characterization instead: C_w is the unique bar-invariant element of the
// form T_w + sum_{y<w} g_y T_y with every g_y in v.Z[v].
//
// Construction: seed b = C_s * C_u (s a descent of w, u = sw, both known by
// induction; the product uses only the T multiplication rule), then sweep y
// downwards and subtract m_y C_y, where m_y is the bar-symmetric Laurent
// polynomial matching the exponent <= 0 part of the T_y coefficient.  The
// result is checked bar-invariant using an explicit bar involution
// (bar(v) = v^{-1}, bar(T_y) = (T_{y^{-1}})^{-1}), and the oracle P values
// are read off the final coefficients.

#include <map>
#include <stdexcept>
#include <vector>

#include "coxcell/group.hpp"
#include "coxcell/int_poly.hpp"
#include "coxcell/laurent.hpp"

namespace kl_oracle {

using coxcell::BigInt;
using coxcell::GroupTable;
using coxcell::IntPoly;
using coxcell::LaurentPoly;

using Hecke = std::map<int, LaurentPoly>;

inline void add_term(Hecke& h, int w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = h.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

class Oracle {
 public:
  explicit Oracle(const GroupTable& g) : g_(g) {
    int n = g_.size();
    c_.resize(n);
    c_[0] = Hecke{{0, LaurentPoly(BigInt(1))}};  // C_e = T_e
    for (int w = 1; w < n; ++w) build(w);
  }

  const Hecke& c_basis(int w) const { return c_[w]; }

  // P_{y,w} recovered from the T_y coefficient of C_w.
  IntPoly kl_poly(int y, int w) const {
    auto it = c_[w].find(y);
    if (it == c_[w].end()) return IntPoly();
    int d = g_.length(w) - g_.length(y);
    IntPoly p;
    for (auto& [e, coeff] : it->second.coeffs()) {
      long j2 = d - e;  // exponent v^{d-2j}
      if (j2 % 2 != 0) throw std::logic_error("oracle: parity violation");
      p.add_term(j2 / 2, d % 2 == 0 ? coeff : -coeff);
    }
    return p;
  }

  Hecke gen_mul_left(int s, const Hecke& h) const {
    const LaurentPoly vmv = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    Hecke out;
    for (auto& [w, c] : h) {
      int sw = g_.lmul(s, w);
      if (g_.length(sw) > g_.length(w)) {
        add_term(out, sw, c);
      } else {
        add_term(out, w, vmv * c);
        add_term(out, sw, c);
      }
    }
    return out;
  }

  // h . T_s^{-1} with T_s^{-1} = T_s - (v - v^{-1}) T_e.
  Hecke rmul_ts_inverse(int s, const Hecke& h) const {
    const LaurentPoly vmv = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    Hecke out;
    for (auto& [w, c] : h) {
      int ws = g_.rmul(w, s);
      if (g_.length(ws) > g_.length(w)) {
        add_term(out, ws, c);
        add_term(out, w, -(vmv * c));
      } else {
        // T_w T_s = (v-v^{-1}) T_w + T_{ws}, so T_w T_s^{-1} = T_{ws}.
        add_term(out, ws, c);
      }
    }
    return out;
  }

  Hecke bar(const Hecke& h) const {
    Hecke out;
    for (auto& [y, c] : h) {
      // bar(T_y) = (T_{y1})^{-1 applied} ... = T_e . T_{y1}^{-1} ... T_{yk}^{-1}
      Hecke t{{0, LaurentPoly(BigInt(1))}};
      for (int s : g_.element(y).word) t = rmul_ts_inverse(s, t);
      LaurentPoly cm = c.mirrored();
      for (auto& [w, tc] : t) add_term(out, w, cm * tc);
    }
    return out;
  }

 private:
  void build(int w) {
    int s = g_.first_left_descent(w);
    int u = g_.lmul(s, w);
    // b = C_s C_u = T_s . C_u - v C_u.
    Hecke b = gen_mul_left(s, c_[u]);
    for (auto& [y, c] : c_[u]) add_term(b, y, -(LaurentPoly::monomial(1) * c));
    // Triangular correction, highest index (hence highest length) first.
    // Subtracting m C_y only touches entries at or below y.
    for (int y = w - 1; y >= 0; --y) {
      auto it = b.find(y);
      if (it == b.end()) continue;
      LaurentPoly m;
      for (auto& [e, coeff] : it->second.coeffs()) {
        if (e > 0) continue;
        m.add_term(e, coeff);
        if (e < 0) m.add_term(-e, coeff);
      }
      if (m.is_zero()) continue;
      if (!(m == m.mirrored())) throw std::logic_error("oracle: correction not symmetric");
      for (auto& [z, c] : c_[y]) add_term(b, z, -(m * c));
    }
    // Certify the defining properties before accepting.
    if (!(bar(b) == b)) throw std::logic_error("oracle: result not bar-invariant");
    for (auto& [y, c] : b) {
      if (y == w) {
        if (!(c == LaurentPoly(BigInt(1)))) throw std::logic_error("oracle: top not 1");
      } else if (c.lowest_degree().value() <= 0) {
        throw std::logic_error("oracle: off-diagonal term not in v.Z[v]");
      }
    }
    c_[w] = std::move(b);
  }

  const GroupTable& g_;
  std::vector<Hecke> c_;
};

}  // namespace kl_oracle
