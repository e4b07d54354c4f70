#pragma once

// Hecke algebra elements in the normalized basis {T_w}, with coefficients in
// Z[v, v^{-1}], v = q^{1/2}.  The defining multiplication rule is
//
//   T_s T_w = T_{sw}                      if l(sw) > l(w)
//   T_s T_w = (v - v^{-1}) T_w + T_{sw}   if l(sw) < l(w)
//
// extended linearly; right multiplication is symmetric.  These maps work on
// any CoxeterSystem (finite or not); the finite-group machinery in kl.hpp
// uses an index-based mirror of the same rule.

#include <map>

#include "coxcell/laurent.hpp"
#include "coxcell/words.hpp"

namespace coxcell {

using HeckeElement = std::map<Element, LaurentPoly>;  // no zero coefficients

enum class Side { Left, Right };

inline void hecke_add_term(HeckeElement& h, const Element& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = h.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

inline HeckeElement t_mul_gen(const CoxeterSystem& sys, int s, const HeckeElement& h,
                              Side side) {
  static const LaurentPoly v_minus_vinv =
      LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  HeckeElement out;
  for (const auto& [w, c] : h) {
    Element sw = side == Side::Left ? sys.left_mul(s, w) : sys.right_mul(w, s);
    if (sw.length() > w.length()) {
      hecke_add_term(out, sw, c);
    } else {
      hecke_add_term(out, w, v_minus_vinv * c);
      hecke_add_term(out, sw, c);
    }
  }
  return out;
}

// Replace every coefficient by its value at v = 1, giving a formal integer
// combination of group elements.
inline std::map<Element, BigInt> specialize_q1(const HeckeElement& h) {
  std::map<Element, BigInt> out;
  for (const auto& [w, c] : h) {
    BigInt n = c.evaluate_at_one();
    if (n != 0) out.emplace(w, std::move(n));
  }
  return out;
}

}  // namespace coxcell
