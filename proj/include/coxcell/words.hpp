#pragma once

// Words and canonical element forms.
//
// An Element is the ShortLex-least reduced word of a group element, letters
// being generator indices into the graph's ordered generator list.  Since
// all reduced words of one element have equal length, ShortLex-least within
// the braid closure is plain lexicographic-least.
//
// Reduction uses the Matsumoto-Tits fact twice over: all reduced words of an
// element are connected by braid moves, and a word is reduced iff no member
// of its braid-move closure contains an adjacent equal pair.  Closures of
// reduced words are memoized per member word; a CoxeterSystem is therefore
// cheap to query repeatedly but needs external synchronization (or one
// instance per thread) for concurrent use.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcell/graph.hpp"

namespace coxcell {

using Word = std::vector<int>;

struct Element {
  Word word;  // canonical (ShortLex-least reduced) form

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Element& a, const Element& b) { return a.word == b.word; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

struct Enumeration {
  std::vector<std::vector<Element>> levels;  // levels[k] = elements of length k
  bool exhausted = false;                    // true iff a level came out empty

  size_t total() const {
    size_t n = 0;
    for (auto& l : levels) n += l.size();
    return n;
  }
};

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterGraph graph) : graph_(std::move(graph)) {}

  const CoxeterGraph& graph() const { return graph_; }

  // All reduced words of the element of w, as the closure of {w} under
  // single braid moves.  Throws if w is not reduced.
  const std::vector<Word>& braid_closure(const Word& w) const {
    check_letters(w);
    if (auto it = closure_cache_.find(w); it != closure_cache_.end()) return *it->second;
    auto [closure, has_pair] = close_under_braid_moves(w);
    if (has_pair) throw std::invalid_argument("braid_closure: word is not reduced");
    return *memoize(std::move(closure));
  }

  Element normal_form(const Word& w) const {
    check_letters(w);
    Word cur = w;
    for (;;) {
      strip_adjacent_pairs(cur);
      if (cur.size() <= 1) return Element{cur};
      if (auto it = closure_cache_.find(cur); it != closure_cache_.end())
        return Element{it->second->front()};
      auto [closure, has_pair] = close_under_braid_moves(cur);
      if (!has_pair) return Element{memoize(std::move(closure))->front()};
      // Some member exposes an ss pair: delete it and start over.
      for (const Word& u : closure) {
        for (size_t i = 0; i + 1 < u.size(); ++i) {
          if (u[i] == u[i + 1]) {
            cur = u;
            cur.erase(cur.begin() + i, cur.begin() + i + 2);
            goto reduced_once;
          }
        }
      }
      throw std::logic_error("closure flagged a pair that is not present");
    reduced_once:;
    }
  }

  Element identity() const { return Element{}; }
  Element generator(int s) const {
    check_letters({s});
    return Element{Word{s}};
  }

  // Normal form of the concatenation; the cap guards against blow-up on
  // infinite groups.
  Element multiply(const Element& a, const Element& b, int cap = 64) const {
    if (a.length() + b.length() > cap)
      throw std::length_error("multiply: length cap exceeded");
    Word w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return normal_form(w);
  }

  Element left_mul(int s, const Element& w) const {
    Word u{s};
    u.insert(u.end(), w.word.begin(), w.word.end());
    return normal_form(u);
  }
  Element right_mul(const Element& w, int s) const {
    Word u = w.word;
    u.push_back(s);
    return normal_form(u);
  }

  Element inverse(const Element& w) const {
    Word u(w.word.rbegin(), w.word.rend());
    return normal_form(u);
  }

  bool is_left_descent(int s, const Element& w) const {
    return left_mul(s, w).length() < w.length();
  }
  bool is_right_descent(const Element& w, int s) const {
    return right_mul(w, s).length() < w.length();
  }

  std::pair<std::vector<int>, std::vector<int>> descents(const Element& w) const {
    std::vector<int> left, right;
    for (int s = 0; s < graph_.size(); ++s) {
      if (is_left_descent(s, w)) left.push_back(s);
      if (is_right_descent(w, s)) right.push_back(s);
    }
    return {left, right};
  }

  // Bruhat order by the standard lifting recursion on a left descent of w.
  bool bruhat_leq(const Element& y, const Element& w) const {
    if (y.length() > w.length()) return false;
    if (y == w) return true;
    if (w.is_identity()) return y.is_identity();
    if (auto it = bruhat_cache_.find({y, w}); it != bruhat_cache_.end()) return it->second;
    int s = w.word.front();  // a left descent: canonical words start with one
    Element sw{Word(w.word.begin() + 1, w.word.end())};
    sw = normal_form(sw.word);
    Element sy = left_mul(s, y);
    bool result = sy.length() < y.length() ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
    bruhat_cache_.emplace(std::make_pair(y, w), result);
    return result;
  }

  bool unique_reduced_expression(const Element& w) const {
    return braid_closure(w.word).size() == 1;
  }

  // r_k = rtr... (k factors).  Requires k <= m_rt when m_rt is finite.
  Element alternating_word(int r, int t, int k) const {
    if (r == t) throw std::invalid_argument("alternating_word: generators must differ");
    check_letters({r, t});
    int m = graph_.order(r, t);
    if (k < 0 || (m != kInfiniteOrder && k > m))
      throw std::invalid_argument("alternating_word: k exceeds m_rt (word not reduced)");
    Word w;
    for (int i = 0; i < k; ++i) w.push_back(i % 2 == 0 ? r : t);
    return normal_form(w);
  }

  // BFS from the identity, one level per length.  Stops when a level is
  // empty (exhausted = true) or when a cap trips (exhausted = false).
  Enumeration enumerate(int length_cap = 12, size_t size_cap = 2000) const {
    Enumeration en;
    en.levels.push_back({identity()});
    size_t total = 1;
    for (int len = 1; len <= length_cap; ++len) {
      std::set<Element> next;
      for (const Element& w : en.levels.back()) {
        for (int s = 0; s < graph_.size(); ++s) {
          Element u = right_mul(w, s);
          if (u.length() == len) next.insert(std::move(u));
        }
      }
      if (next.empty()) {
        en.exhausted = true;
        return en;
      }
      total += next.size();
      en.levels.emplace_back(next.begin(), next.end());
      if (total > size_cap) return en;
    }
    return en;
  }

  std::string word_string(const Element& w) const {
    if (w.is_identity()) return "e";
    bool single = true;
    for (auto& l : graph_.generators()) single = single && l.size() == 1;
    std::string s;
    for (size_t i = 0; i < w.word.size(); ++i) {
      if (i && !single) s += ".";
      s += graph_.label(w.word[i]);
    }
    return s;
  }

  // Parses "e", "rtr" (single-character labels), "s2" or "s1.s2.s1".
  Element parse_word(const std::string& text) const {
    if (text == "e") return identity();
    if (graph_.has_label(text)) return generator(graph_.index(text));
    Word w;
    if (text.find('.') != std::string::npos) {
      size_t pos = 0;
      while (pos <= text.size()) {
        size_t dot = text.find('.', pos);
        if (dot == std::string::npos) dot = text.size();
        w.push_back(graph_.index(text.substr(pos, dot - pos)));
        pos = dot + 1;
      }
    } else {
      for (char c : text) w.push_back(graph_.index(std::string(1, c)));
    }
    return normal_form(w);
  }

 private:
  void check_letters(const Word& w) const {
    for (int s : w)
      if (s < 0 || s >= graph_.size())
        throw std::invalid_argument("letter out of range");
  }

  static void strip_adjacent_pairs(Word& w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
  }

  // Closure of {w} under single braid moves, plus whether any member has an
  // adjacent equal pair.  Words of equal length only, so this is finite.
  std::pair<std::vector<Word>, bool> close_under_braid_moves(const Word& w) const {
    std::set<Word> seen{w};
    std::vector<Word> queue{w};
    bool has_pair = false;
    while (!queue.empty()) {
      Word u = std::move(queue.back());
      queue.pop_back();
      for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) has_pair = true;
        int a = u[i], b = u[i + 1];
        if (a == b) continue;
        int m = graph_.order(a, b);
        if (m == kInfiniteOrder || i + m > u.size()) continue;
        bool alternating = true;
        for (int j = 0; j < m; ++j)
          if (u[i + j] != (j % 2 == 0 ? a : b)) alternating = false;
        if (!alternating) continue;
        Word v = u;
        for (int j = 0; j < m; ++j) v[i + j] = (j % 2 == 0 ? b : a);
        if (seen.insert(v).second) queue.push_back(v);
      }
    }
    return {std::vector<Word>(seen.begin(), seen.end()), has_pair};
  }

  // Stores a reduced closure under each of its member words; the vector is
  // sorted, so front() is the canonical form.
  std::shared_ptr<const std::vector<Word>> memoize(std::vector<Word> closure) const {
    auto ptr = std::make_shared<const std::vector<Word>>(std::move(closure));
    for (const Word& u : *ptr) closure_cache_[u] = ptr;
    return ptr;
  }

  CoxeterGraph graph_;
  mutable std::map<Word, std::shared_ptr<const std::vector<Word>>> closure_cache_;
  mutable std::map<std::pair<Element, Element>, bool> bruhat_cache_;
};

}  // namespace coxcell
