#pragma once

// Index tables for a finite (exhaustively enumerated) Coxeter group:
// elements in ShortLex order, generator multiplication tables, lengths,
// inverses and the full Bruhat relation.  Everything downstream of the
// Kazhdan-Lusztig machinery works with these integer indices.

#include <map>
#include <stdexcept>
#include <vector>

#include "coxcell/words.hpp"

namespace coxcell {

class GroupTable {
 public:
  explicit GroupTable(const CoxeterSystem& sys, int length_cap = 30,
                      size_t size_cap = 10000)
      : sys_(sys) {
    Enumeration en = sys.enumerate(length_cap, size_cap);
    if (!en.exhausted)
      throw std::runtime_error(
          "group not finite within caps (length " + std::to_string(length_cap) +
          ", size " + std::to_string(size_cap) + ")");
    for (auto& level : en.levels)
      for (auto& w : level) {
        index_.emplace(w, static_cast<int>(elems_.size()));
        elems_.push_back(w);
      }
    int n = size(), gens = sys.graph().size();
    lmul_.assign(gens, std::vector<int>(n));
    rmul_.assign(gens, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < gens; ++s) {
        lmul_[s][i] = index_.at(sys.left_mul(s, elems_[i]));
        rmul_[s][i] = index_.at(sys.right_mul(elems_[i], s));
      }
    inverse_.resize(n);
    for (int i = 0; i < n; ++i) inverse_[i] = index_.at(sys.inverse(elems_[i]));
    build_bruhat();
  }

  const CoxeterSystem& system() const { return sys_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Element& element(int i) const { return elems_.at(i); }
  int index(const Element& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }
  int length(int i) const { return elems_[i].length(); }
  int lmul(int s, int i) const { return lmul_[s][i]; }
  int rmul(int i, int s) const { return rmul_[s][i]; }
  int inverse(int i) const { return inverse_[i]; }

  bool left_descent(int s, int i) const { return length(lmul(s, i)) < length(i); }
  bool right_descent(int i, int s) const { return length(rmul(i, s)) < length(i); }

  // Canonical words begin with a left descent.
  int first_left_descent(int i) const {
    if (i == 0) throw std::invalid_argument("identity has no descent");
    return elems_[i].word.front();
  }

  // Index of the longest element (last in ShortLex order).
  int longest() const { return size() - 1; }

  bool bruhat_leq(int y, int w) const { return bruhat_[w][y]; }

  std::string word_string(int i) const { return sys_.word_string(elems_[i]); }

 private:
  // Lifting recursion, filled in increasing length order: for a left descent
  // s of w, y <= w iff (sy <= sw when sy < y) else (y <= sw).
  void build_bruhat() {
    int n = size();
    bruhat_.assign(n, std::vector<bool>(n, false));
    bruhat_[0][0] = true;
    for (int w = 1; w < n; ++w) {
      int s = first_left_descent(w);
      int sw = lmul_[s][w];
      for (int y = 0; y < n; ++y) {
        if (length(y) > length(w)) continue;
        int sy = lmul_[s][y];
        bruhat_[w][y] = length(sy) < length(y) ? bruhat_[sw][sy] : bruhat_[sw][y];
      }
      bruhat_[w][w] = true;
    }
  }

  const CoxeterSystem& sys_;
  std::vector<Element> elems_;
  std::map<Element, int> index_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::vector<int> inverse_;
  std::vector<std::vector<bool>> bruhat_;
};

}  // namespace coxcell
