#pragma once

// Coxeter graphs: an ordered generator list and the symmetric order matrix
// (m_st), with m = 0 standing for an infinite order.  The derived flags
// (connected, simply laced, cycle count) refer to the graph whose edges are
// the pairs with m >= 3, which is the usual Coxeter graph.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcell {

constexpr int kInfiniteOrder = 0;

struct CoxeterEdge {
  std::string a, b;
  int m = 2;  // kInfiniteOrder for m = infinity
};

class CoxeterGraph {
 public:
  // Validates and derives flags; unlisted pairs default to m = 2.
  static CoxeterGraph validate(std::vector<std::string> generators,
                               const std::vector<CoxeterEdge>& edges) {
    CoxeterGraph g;
    g.labels_ = std::move(generators);
    if (g.labels_.empty()) throw std::invalid_argument("no generators");
    for (size_t i = 0; i < g.labels_.size(); ++i) {
      const std::string& l = g.labels_[i];
      if (l.empty()) throw std::invalid_argument("empty generator label");
      if (l == "e") throw std::invalid_argument("label 'e' is reserved for the identity");
      for (char c : l)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw std::invalid_argument("generator label must be alphanumeric: " + l);
      if (!g.index_.emplace(l, static_cast<int>(i)).second)
        throw std::invalid_argument("duplicate generator label: " + l);
    }
    size_t n = g.labels_.size();
    g.orders_.assign(n * n, 2);
    for (size_t i = 0; i < n; ++i) g.orders_[i * n + i] = 1;
    for (const auto& e : edges) {
      int i = g.index(e.a), j = g.index(e.b);
      if (i == j) throw std::invalid_argument("edge endpoints must differ: " + e.a);
      if (e.m != kInfiniteOrder && e.m < 2)
        throw std::invalid_argument("edge order must be >= 2 or infinite");
      g.orders_[i * n + j] = e.m;
      g.orders_[j * n + i] = e.m;
    }
    return g;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& generators() const { return labels_; }
  const std::string& label(int s) const { return labels_.at(s); }
  int index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("unknown generator: " + label);
    return it->second;
  }
  bool has_label(const std::string& label) const { return index_.count(label) > 0; }

  int order(int s, int t) const { return orders_[s * size() + t]; }
  bool finite_order(int s, int t) const { return order(s, t) != kInfiniteOrder; }

  // Edges of the Coxeter graph proper (m >= 3 or infinite), i < j.
  std::vector<std::pair<int, int>> coxeter_edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (order(i, j) != 2) e.emplace_back(i, j);
    return e;
  }

  bool connected() const {
    std::vector<int> comp = components();
    return *std::max_element(comp.begin(), comp.end()) == 0;
  }

  bool simply_laced() const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (order(i, j) != 2 && order(i, j) != 3) return false;
    return true;
  }

  // First Betti number of the m >= 3 edge graph: |E| - |V| + #components.
  int cycle_count() const {
    std::vector<int> comp = components();
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    return static_cast<int>(coxeter_edges().size()) - size() + ncomp;
  }

 private:
  std::vector<int> components() const {
    std::vector<int> comp(size(), -1);
    int next = 0;
    for (int start = 0; start < size(); ++start) {
      if (comp[start] != -1) continue;
      std::vector<int> stack{start};
      comp[start] = next;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < size(); ++v) {
          if (v != u && order(u, v) != 2 && comp[v] == -1) {
            comp[v] = next;
            stack.push_back(v);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<int> orders_;
};

// Common test/CLI graphs.
inline CoxeterGraph dihedral_graph(int m) {
  return CoxeterGraph::validate({"r", "t"}, {{"r", "t", m}});
}
inline CoxeterGraph type_a_graph(int n) {
  std::vector<std::string> gens;
  std::vector<CoxeterEdge> edges;
  for (int i = 1; i <= n; ++i) gens.push_back("s" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    edges.push_back({"s" + std::to_string(i), "s" + std::to_string(i + 1), 3});
  return CoxeterGraph::validate(std::move(gens), edges);
}
// Weyl type D4: s2 is the central node.
inline CoxeterGraph type_d4_graph() {
  return CoxeterGraph::validate({"s1", "s2", "s3", "s4"},
                                {{"s1", "s2", 3}, {"s2", "s3", 3}, {"s2", "s4", 3}});
}
// Affine A2: a triangle with all orders 3 (one cycle).
inline CoxeterGraph triangle_graph() {
  return CoxeterGraph::validate({"s0", "s1", "s2"},
                                {{"s0", "s1", 3}, {"s1", "s2", 3}, {"s0", "s2", 3}});
}

}  // namespace coxcell
