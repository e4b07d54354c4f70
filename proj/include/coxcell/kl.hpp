#pragma once

// Kazhdan-Lusztig data for a finite Coxeter group: the polynomials P_{y,w}
// and mu table, the C basis, structure constants h_{x,y,w}, the a-function,
// two-sided cells and cell representation matrices.
//
// Conventions.  With v = q^{1/2},
//
//   C_w = sum_y (-1)^{l(w)+l(y)} q^{(l(w)-l(y))/2} P_{y,w}(q^{-1}) T_y,
//
// so the T_y coefficient is (-1)^{l(w)-l(y)} sum_j p_j v^{l(w)-l(y)-2j} when
// P_{y,w} = sum_j p_j q^j.  In particular C_e = T_e and C_s = T_s - v.
//
// P is filled by the classical descent recursion: for a left descent s of w
// and u = sw, with c = 1 if sy < y and c = 0 otherwise,
//
//   P_{y,w} = q^{1-c} P_{sy,u} + q^c P_{y,u}
//             - sum { mu(z,u) q^{(l(w)-l(z))/2} P_{y,z} : y <= z < u, sz < z },
//
// where P_{a,b} = 0 unless a <= b.  The structure constants come from
// multiplying C-basis elements in the T basis and re-expanding by strictly
// length-descending unitriangular elimination (C_w = T_w + lower terms).

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxcell/group.hpp"
#include "coxcell/hecke.hpp"
#include "coxcell/int_poly.hpp"
#include "coxcell/laurent.hpp"
#include "coxcell/matrix.hpp"
#include "coxcell/fields.hpp"

namespace coxcell {

using IndexedHecke = std::map<int, LaurentPoly>;  // element index -> coefficient

inline void indexed_add_term(IndexedHecke& h, int w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = h.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) h.erase(it);
  }
}

class KLContext {
 public:
  explicit KLContext(const CoxeterSystem& sys, int length_cap = 30,
                     size_t size_cap = 10000)
      : table_(sys, length_cap, size_cap) {
    compute_kl();
  }

  const GroupTable& group() const { return table_; }
  int size() const { return table_.size(); }

  const IntPoly& kl_poly(int y, int w) const { return P_[w * size() + y]; }
  long mu(int y, int w) const { return mu_[w * size() + y]; }

  // C_w expanded in the T basis.
  const IndexedHecke& c_basis(int w) const {
    if (!computed_[w]) {
      IndexedHecke h;
      int lw = table_.length(w);
      for (int y = 0; y < size(); ++y) {
        if (!table_.bruhat_leq(y, w)) continue;
        int d = lw - table_.length(y);
        LaurentPoly coeff;
        for (auto& [j, p] : kl_poly(y, w).coeffs())
          coeff.add_term(d - 2 * j, (d % 2 == 0 ? p : -p));
        indexed_add_term(h, y, coeff);
      }
      cbasis_[w] = std::move(h);
      computed_[w] = true;
    }
    return cbasis_[w];
  }

  // T_s . h or h . T_s
  IndexedHecke gen_mul(int s, const IndexedHecke& h, Side side) const {
    static const LaurentPoly v_minus_vinv =
        LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    IndexedHecke out;
    for (const auto& [w, c] : h) {
      int sw = side == Side::Left ? table_.lmul(s, w) : table_.rmul(w, s);
      if (table_.length(sw) > table_.length(w)) {
        indexed_add_term(out, sw, c);
      } else {
        indexed_add_term(out, w, v_minus_vinv * c);
        indexed_add_term(out, sw, c);
      }
    }
    return out;
  }

  // T_x . h for a group element x (letters applied right to left).
  IndexedHecke t_mul(int x, IndexedHecke h) const {
    const Word& word = table_.element(x).word;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      h = gen_mul(*it, h, Side::Left);
    return h;
  }

  // C_x C_y in the T basis.
  IndexedHecke c_product(int x, int y) const {
    IndexedHecke out;
    const IndexedHecke& cy = c_basis(y);
    for (const auto& [z, coeff] : c_basis(x)) {
      IndexedHecke part = t_mul(z, cy);
      for (auto& [w, c] : part) indexed_add_term(out, w, coeff * c);
    }
    return out;
  }

  // Re-expand a T-basis element in the C basis.  Element indices are in
  // ShortLex order, so the maximal index always has maximal length.
  std::map<int, LaurentPoly> expand_in_c_basis(IndexedHecke h) const {
    std::map<int, LaurentPoly> out;
    while (!h.empty()) {
      auto [w, f] = *h.rbegin();
      out.emplace(w, f);
      for (const auto& [y, c] : c_basis(w)) indexed_add_term(h, y, -(f * c));
      if (h.count(w)) throw std::logic_error("triangular elimination failed");
    }
    return out;
  }

  HeckeElement to_hecke(const IndexedHecke& h) const {
    HeckeElement out;
    for (auto& [w, c] : h) out.emplace(table_.element(w), c);
    return out;
  }

 private:
  void compute_kl() {
    int n = size();
    P_.assign(n * n, IntPoly());
    mu_.assign(n * n, 0);
    cbasis_.assign(n, IndexedHecke());
    computed_.assign(n, false);
    P_[0] = IntPoly(BigInt(1));  // P_{e,e}
    for (int w = 1; w < n; ++w) {
      int s = table_.first_left_descent(w);
      int u = table_.lmul(s, w);
      int lw = table_.length(w);
      for (int y = 0; y < n; ++y) {
        if (!table_.bruhat_leq(y, w)) continue;
        if (y == w) {
          P_[w * n + y] = IntPoly(BigInt(1));
          continue;
        }
        int sy = table_.lmul(s, y);
        bool c1 = table_.length(sy) < table_.length(y);
        IntPoly q = IntPoly::monomial(1);
        IntPoly p;
        const IntPoly& p_sy_u = table_.bruhat_leq(sy, u) ? P_[u * n + sy] : zero_poly();
        const IntPoly& p_y_u = table_.bruhat_leq(y, u) ? P_[u * n + y] : zero_poly();
        if (c1)
          p = p_sy_u + q * p_y_u;
        else
          p = q * p_sy_u + p_y_u;
        for (int z = 0; z < n; ++z) {
          if (z == u || !table_.bruhat_leq(z, u) || !table_.bruhat_leq(y, z)) continue;
          if (!table_.left_descent(s, z)) continue;
          long m = mu_[u * n + z];
          if (m == 0) continue;
          int d = lw - table_.length(z);
          if (d % 2 != 0) throw std::logic_error("odd exponent in KL correction");
          p -= IntPoly::monomial(d / 2, BigInt(m)) * P_[z * n + y];
        }
        P_[w * n + y] = std::move(p);
      }
      // mu row for w.
      for (int y = 0; y < n; ++y) {
        if (!table_.bruhat_leq(y, w) || y == w) continue;
        int d = lw - table_.length(y);
        if (d % 2 == 1) {
          BigInt top = P_[w * n + y].coeff((d - 1) / 2);
          if (!top.fits_slong_p()) throw std::overflow_error("mu overflow");
          mu_[w * n + y] = top.get_si();
        }
      }
    }
  }

  static const IntPoly& zero_poly() {
    static const IntPoly z;
    return z;
  }

  GroupTable table_;
  std::vector<IntPoly> P_;
  std::vector<long> mu_;
  mutable std::vector<IndexedHecke> cbasis_;
  mutable std::vector<bool> computed_;
};

// Every h_{x,y,w} for a finite group, with the induced a-function
//   a(w) = max(0, -min over x,y of the lowest v-degree of h_{x,y,w}).
class StructureConstants {
 public:
  explicit StructureConstants(const KLContext& ctx) : ctx_(ctx) {
    int n = ctx.size();
    h_.resize(static_cast<size_t>(n) * n);
    std::vector<long> min_lowdeg(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto expansion = ctx.expand_in_c_basis(ctx.c_product(x, y));
        for (auto& [w, h] : expansion) {
          auto low = h.lowest_degree();
          if (low && *low < min_lowdeg[w]) min_lowdeg[w] = *low;
        }
        h_[static_cast<size_t>(x) * n + y] = std::move(expansion);
      }
    a_.resize(n);
    for (int w = 0; w < n; ++w) a_[w] = static_cast<int>(-min_lowdeg[w]);
  }

  const KLContext& context() const { return ctx_; }

  const std::map<int, LaurentPoly>& row(int x, int y) const {
    return h_[static_cast<size_t>(x) * ctx_.size() + y];
  }
  const LaurentPoly& h(int x, int y, int w) const {
    static const LaurentPoly zero;
    const auto& r = row(x, y);
    auto it = r.find(w);
    return it == r.end() ? zero : it->second;
  }

  int a_value(int w) const { return a_[w]; }
  const std::vector<int>& a_report() const { return a_; }

 private:
  const KLContext& ctx_;
  std::vector<std::map<int, LaurentPoly>> h_;
  std::vector<int> a_;
};

struct CellPartition {
  std::vector<std::vector<int>> blocks;     // each sorted; list sorted by min element
  std::vector<std::vector<bool>> block_leq; // block_leq[i][j]: block i <=_LR block j
};

// Two-sided cells from the digraph with an edge x -> y whenever C_y has
// nonzero coefficient in C_s C_x or C_x C_s for some generator s (the C_s
// generate the algebra, so reachability realizes the full <=_LR preorder).
inline CellPartition lr_cells(const KLContext& ctx) {
  int n = ctx.size();
  int gens = ctx.group().system().graph().size();
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x) {
    std::set<int> targets;
    for (int s = 0; s < gens; ++s)
      for (Side side : {Side::Left, Side::Right}) {
        IndexedHecke prod = ctx.gen_mul(s, ctx.c_basis(x), side);
        // C_s C_x = (T_s - v) C_x viewed in the T basis.
        for (auto& [w, c] : ctx.c_basis(x))
          indexed_add_term(prod, w, -(LaurentPoly::monomial(1) * c));
        for (auto& [y, c] : ctx.expand_in_c_basis(std::move(prod))) targets.insert(y);
      }
    adj[x].assign(targets.begin(), targets.end());
  }
  // reach[x][y]: y is reachable from x, i.e. y <=_LR x.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    std::vector<int> stack{x};
    reach[x][x] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!reach[x][v]) {
          reach[x][v] = true;
          stack.push_back(v);
        }
    }
  }
  std::vector<int> block_of(n, -1);
  CellPartition part;
  for (int x = 0; x < n; ++x) {
    if (block_of[x] != -1) continue;
    std::vector<int> block;
    for (int y = x; y < n; ++y)
      if (block_of[y] == -1 && reach[x][y] && reach[y][x]) {
        block_of[y] = static_cast<int>(part.blocks.size());
        block.push_back(y);
      }
    part.blocks.push_back(std::move(block));
  }
  int nb = static_cast<int>(part.blocks.size());
  part.block_leq.assign(nb, std::vector<bool>(nb, false));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      part.block_leq[i][j] = reach[part.blocks[j].front()][part.blocks[i].front()];
  return part;
}

inline std::map<int, BigInt> specialize_q1_indexed(const IndexedHecke& h) {
  std::map<int, BigInt> out;
  for (auto& [w, c] : h) {
    BigInt n = c.evaluate_at_one();
    if (n != 0) out.emplace(w, std::move(n));
  }
  return out;
}

// For each x in W, the |cell| x |cell| integer matrix of C_x acting on the
// J basis of the cell at q = 1: entry (w, y) is h_{x,y,w} evaluated at v=1.
inline std::vector<Matrix<RationalField>> cell_rep_matrices(
    const StructureConstants& sc, const std::vector<int>& cell) {
  RationalField k;
  int n = sc.context().size();
  size_t d = cell.size();
  std::map<int, size_t> pos;
  for (size_t i = 0; i < d; ++i) pos.emplace(cell[i], i);
  std::vector<Matrix<RationalField>> mats;
  mats.reserve(n);
  for (int x = 0; x < n; ++x) {
    Matrix<RationalField> m(d, d, k.zero());
    for (size_t yi = 0; yi < d; ++yi)
      for (auto& [w, h] : sc.row(x, cell[yi])) {
        auto it = pos.find(w);
        if (it != pos.end()) m.at(it->second, yi) = Rational(h.evaluate_at_one());
      }
    mats.push_back(std::move(m));
  }
  return mats;
}

}  // namespace coxcell
