#pragma once

// Construction side of the representation analysis:
//
//  * the geometric (reflection) representation of any Coxeter graph,
//  * the one-parameter family V_x on connected simply laced graphs with
//    exactly one cycle: basis {alpha_s}, s.alpha_s = -alpha_s, neighbours add
//    alpha_s, and the distinguished cycle edge (s_0, s_n) twisted by
//    s_0.alpha_{s_n} = alpha_{s_n} + x alpha_{s_0},
//    s_n.alpha_{s_0} = alpha_{s_0} + (1/x) alpha_{s_n},
//  * quotients by invariant subspaces (used with the fixed subrepresentation),
//  * a Burnside irreducibility test (span of all products reaches dim^2),
//  * the eigenline maps f_{tr}: V_r^- -> V_t^-, v |-> t.v - v on m = 3 edges,
//    and the holonomy scalar of their composite once around the cycle, which
//    classifies the family.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcell/fields.hpp"
#include "coxcell/graph.hpp"
#include "coxcell/matrix.hpp"
#include "coxcell/rep.hpp"

namespace coxcell {

// ---- geometric representation ------------------------------------------

namespace detail {
// Conductor 2 * lcm of the finite edge orders.
inline long geometric_conductor(const CoxeterGraph& g) {
  long l = 1;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.finite_order(i, j)) l = std::lcm(l, static_cast<long>(g.order(i, j)));
  return 2 * l;
}

template <class K>
MatrixRep<K> geometric_rep_impl(const CoxeterGraph& g, const K& field,
                                const std::vector<std::vector<typename K::Scalar>>& coeff) {
  size_t n = g.size();
  MatrixRep<K> rep{g, field, {}};
  for (size_t s = 0; s < n; ++s) {
    Matrix<K> m = Matrix<K>::identity(n, field);
    m.at(s, s) = field.zero() - field.one();
    for (size_t t = 0; t < n; ++t)
      if (t != s) m.at(s, t) = coeff[s][t];  // s . beta_t = beta_t + c_st beta_s
    rep.mats.push_back(std::move(m));
  }
  require_relations(rep);
  return rep;
}
}  // namespace detail

// Over Q; requires every finite edge order in {2, 3} (coefficients 0/1, and 2
// on m = infinity edges, the cos(pi/m) limit value).
inline MatrixRep<RationalField> geometric_rep_rational(const CoxeterGraph& g) {
  RationalField field;
  std::vector<std::vector<Rational>> coeff(g.size(), std::vector<Rational>(g.size()));
  for (int s = 0; s < g.size(); ++s)
    for (int t = 0; t < g.size(); ++t) {
      if (t == s) continue;
      int m = g.order(s, t);
      if (m == kInfiniteOrder)
        coeff[s][t] = 2;
      else if (m == 2)
        coeff[s][t] = 0;
      else if (m == 3)
        coeff[s][t] = 1;
      else
        throw std::invalid_argument("geometric_rep_rational: edge order needs a cyclotomic field");
    }
  return detail::geometric_rep_impl(g, field, coeff);
}

inline MatrixRep<CycloField> geometric_rep_cyclo(const CoxeterGraph& g) {
  CycloField field(detail::geometric_conductor(g));
  std::vector<std::vector<CycloNumber>> coeff(g.size(),
                                              std::vector<CycloNumber>(g.size(), field.zero()));
  for (int s = 0; s < g.size(); ++s)
    for (int t = 0; t < g.size(); ++t) {
      if (t == s) continue;
      int m = g.order(s, t);
      coeff[s][t] = m == kInfiniteOrder ? field.from_int(2) : two_cos(1, m, field.conductor);
    }
  return detail::geometric_rep_impl(g, field, coeff);
}

// Rational when all finite orders are 2 or 3, cyclotomic otherwise.
inline AnyRep geometric_rep(const CoxeterGraph& g) {
  bool rational = true;
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t)
      if (g.finite_order(s, t) && g.order(s, t) > 3) rational = false;
  if (rational) return geometric_rep_rational(g);
  return geometric_rep_cyclo(g);
}

// Gram matrix of the invariant form B(beta_s, beta_s) = 2,
// B(beta_s, beta_t) = -c_st; its kernel is an invariant subspace (for the
// graphs handled here, coefficients are rational).
inline VectorBasis<RationalField> form_radical(const CoxeterGraph& g) {
  if (!g.simply_laced()) throw std::invalid_argument("form_radical: simply laced only");
  RationalField k;
  Matrix<RationalField> gram(g.size(), g.size(), k.zero());
  for (int s = 0; s < g.size(); ++s) {
    gram.at(s, s) = 2;
    for (int t = 0; t < g.size(); ++t)
      if (t != s && g.order(s, t) == 3) gram.at(s, t) = -1;
  }
  return kernel_basis(gram, k);
}

// ---- the one-cycle family ------------------------------------------------

// Ordered vertices s_0, s_1, ..., s_n of the unique cycle: found by stripping
// degree <= 1 vertices of the edge graph, started at the smallest vertex with
// its smallest cycle neighbour.
inline std::vector<int> find_cycle(const CoxeterGraph& g) {
  if (g.cycle_count() != 1)
    throw std::invalid_argument("graph does not have exactly one cycle");
  std::vector<std::vector<int>> adj(g.size());
  for (auto [a, b] : g.coxeter_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> alive(g.size(), true);
  std::vector<int> degree(g.size());
  for (int v = 0; v < g.size(); ++v) degree[v] = static_cast<int>(adj[v].size());
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int v = 0; v < g.size(); ++v) {
      if (!alive[v] || degree[v] > 1) continue;
      alive[v] = false;
      stripped = true;
      for (int u : adj[v])
        if (alive[u]) --degree[u];
    }
  }
  int start = -1;
  for (int v = 0; v < g.size(); ++v)
    if (alive[v] && start == -1) start = v;
  std::vector<int> cycle{start};
  int prev = -1, cur = start;
  do {
    int next = -1;
    for (int u : adj[cur])
      if (alive[u] && u != prev && (next == -1 || u < next)) next = u;
    if (next != start) cycle.push_back(next);
    prev = cur;
    cur = next;
  } while (cur != start);
  return cycle;
}

template <class K>
MatrixRep<K> build_vx(const CoxeterGraph& g, const K& field,
                      const typename K::Scalar& x, const std::vector<int>& cycle) {
  if (!g.simply_laced() || !g.connected() || g.cycle_count() != 1)
    throw std::invalid_argument("build_vx: need a connected simply laced one-cycle graph");
  if (K::is_zero(x)) throw std::domain_error("build_vx: parameter x must be nonzero");
  if (cycle.size() < 3) throw std::invalid_argument("build_vx: bad cycle");
  int s0 = cycle.front(), sn = cycle.back();
  if (g.order(s0, sn) != 3) throw std::invalid_argument("build_vx: cycle not closed");

  size_t n = g.size();
  MatrixRep<K> rep{g, field, {}};
  auto x_inv = field.inv(x);
  for (size_t s = 0; s < n; ++s) {
    Matrix<K> m = Matrix<K>::identity(n, field);
    m.at(s, s) = field.zero() - field.one();
    for (size_t t = 0; t < n; ++t) {
      if (t == s || g.order(s, t) != 3) continue;
      if (static_cast<int>(s) == s0 && static_cast<int>(t) == sn)
        m.at(s, t) = x;
      else if (static_cast<int>(s) == sn && static_cast<int>(t) == s0)
        m.at(s, t) = x_inv;
      else
        m.at(s, t) = field.one();  // s . alpha_t = alpha_t + alpha_s
    }
    rep.mats.push_back(std::move(m));
  }
  require_relations(rep);
  return rep;
}

// ---- quotients -----------------------------------------------------------

// Quotient by an invariant subspace, in the basis obtained by extending the
// subspace basis with standard basis vectors.
template <class K>
MatrixRep<K> quotient(const MatrixRep<K>& rep, const VectorBasis<K>& subspace) {
  const K& k = rep.field;
  size_t n = rep.dim(), c = subspace.size();
  if (c == 0) return rep;
  Matrix<K> u(n, c, k.zero());
  for (size_t j = 0; j < c; ++j) {
    if (subspace[j].size() != n) throw std::invalid_argument("quotient: bad subspace vector");
    for (size_t i = 0; i < n; ++i) u.at(i, j) = subspace[j][i];
  }
  // Invariance: every rho(s) column image must solve against the basis.
  for (const auto& m : rep.mats)
    for (size_t j = 0; j < c; ++j) {
      std::vector<typename K::Scalar> img(n, k.zero());
      for (size_t i = 0; i < n; ++i) {
        img[i] = m.at(i, 0) * u.at(0, j);
        for (size_t l = 1; l < n; ++l) img[i] += m.at(i, l) * u.at(l, j);
      }
      if (!solve(u, img, k)) throw std::invalid_argument("quotient: subspace not invariant");
    }
  // Extend to a full basis with standard vectors.
  Matrix<K> q(n, n, k.zero());
  SpanTracker<K> span(k);
  size_t placed = 0;
  for (size_t j = 0; j < c; ++j, ++placed) {
    span.insert(subspace[j]);
    for (size_t i = 0; i < n; ++i) q.at(i, placed) = subspace[j][i];
  }
  if (span.dimension() != c) throw std::invalid_argument("quotient: basis is dependent");
  for (size_t e = 0; e < n && placed < n; ++e) {
    std::vector<typename K::Scalar> unit(n, k.zero());
    unit[e] = k.one();
    if (span.insert(unit)) {
      q.at(e, placed) = k.one();
      ++placed;
    }
  }
  Matrix<K> qinv = inverse(q, k);
  MatrixRep<K> out{rep.graph, rep.field, {}};
  for (const auto& m : rep.mats) {
    Matrix<K> conj = qinv * m * q;
    Matrix<K> block(n - c, n - c, k.zero());
    for (size_t i = c; i < n; ++i)
      for (size_t j = c; j < n; ++j) block.at(i - c, j - c) = conj.at(i, j);
    for (size_t i = c; i < n; ++i)
      for (size_t j = 0; j < c; ++j)
        if (!K::is_zero(conj.at(i, j)))
          throw std::logic_error("quotient: action does not preserve the subspace");
    out.mats.push_back(std::move(block));
  }
  require_relations(out);
  return out;
}

// ---- irreducibility (Burnside span) ---------------------------------------

// True iff the span of all products of generator matrices is the full
// matrix algebra (dimension dim^2); equivalent to irreducibility over C for
// exact input.  nullopt if the span has not stabilized within the word-length
// cap (unreachable for the sizes used here).
template <class K>
std::optional<bool> irreducible(const MatrixRep<K>& rep) {
  require_relations(rep);
  const K& k = rep.field;
  size_t d = rep.dim();
  auto flatten = [d](const Matrix<K>& m) {
    std::vector<typename K::Scalar> v;
    v.reserve(d * d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) v.push_back(m.at(i, j));
    return v;
  };
  SpanTracker<K> span(k);
  std::vector<Matrix<K>> frontier{Matrix<K>::identity(d, k)};
  span.insert(flatten(frontier.front()));
  size_t max_len = 2 * d * d;
  for (size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Matrix<K>> next;
    for (const auto& m : frontier)
      for (const auto& gen : rep.mats) {
        Matrix<K> prod = m * gen;
        if (span.insert(flatten(prod))) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  if (!frontier.empty()) return std::nullopt;  // cap hit before stabilizing
  return span.dimension() == d * d;
}

// ---- eigenline maps and holonomy ------------------------------------------

template <class K>
Matrix<K> f_map_unchecked(const MatrixRep<K>& rep, int t, int r) {
  const K& k = rep.field;
  auto from = minus_eigenspace(rep, r), to = minus_eigenspace(rep, t);
  size_t n = rep.dim();
  Matrix<K> to_mat(n, to.size(), k.zero());
  for (size_t j = 0; j < to.size(); ++j)
    for (size_t i = 0; i < n; ++i) to_mat.at(i, j) = to[j][i];
  Matrix<K> out(to.size(), from.size(), k.zero());
  for (size_t j = 0; j < from.size(); ++j) {
    std::vector<typename K::Scalar> img(n, k.zero());
    for (size_t i = 0; i < n; ++i) {
      img[i] = k.zero() - from[j][i];
      for (size_t l = 0; l < n; ++l) img[i] += rep.mat(t).at(i, l) * from[j][l];
    }
    auto coords = solve(to_mat, img, k);
    if (!coords) throw std::logic_error("f_map: image not in target eigenspace");
    for (size_t i = 0; i < to.size(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

// Matrix of f_{tr}: V_r^- -> V_t^-, v |-> t.v - v, in the kernel bases
// computed by minus_eigenspace.  Requires m_rt = 3 and the criterion.
template <class K>
Matrix<K> f_map(const MatrixRep<K>& rep, int t, int r) {
  if (rep.graph.order(r, t) != 3)
    throw std::invalid_argument("f_map: requires m_rt = 3");
  if (!a1_criterion(rep))
    throw std::invalid_argument("f_map: representation fails the criterion");
  return f_map_unchecked(rep, t, r);
}

// Scalar of the composite f_{s0 sn} ... f_{s1 s0} on the line V_{s0}^-.
template <class K>
typename K::Scalar holonomy(const MatrixRep<K>& rep, const std::vector<int>& cycle) {
  auto check = is_r_rep(rep);
  if (!check.ok)
    throw std::invalid_argument("holonomy: not an R-representation (" + check.detail + ")");
  const K& k = rep.field;
  auto base = minus_eigenspace(rep, cycle.front());
  if (base.size() != 1) throw std::invalid_argument("holonomy: eigenspace not a line");
  std::vector<typename K::Scalar> v = base.front();
  size_t n = rep.dim();
  for (size_t step = 1; step <= cycle.size(); ++step) {
    int next = cycle[step % cycle.size()];
    std::vector<typename K::Scalar> img(n, k.zero());
    for (size_t i = 0; i < n; ++i) {
      img[i] = k.zero() - v[i];
      for (size_t l = 0; l < n; ++l) img[i] += rep.mat(next).at(i, l) * v[l];
    }
    v = std::move(img);
  }
  // v = scalar * base on the line.
  size_t anchor = 0;
  while (anchor < n && K::is_zero(base.front()[anchor])) ++anchor;
  typename K::Scalar scalar = v[anchor] * k.inv(base.front()[anchor]);
  for (size_t i = 0; i < n; ++i) {
    typename K::Scalar expect = scalar * base.front()[i];
    if (!(v[i] == expect))
      throw std::logic_error("holonomy: composite did not preserve the line");
  }
  return scalar;
}

// ---- classification --------------------------------------------------------

struct ClassifyEntry {
  std::string kind;  // "tree-unique" or "cycle-family"
  size_t dim = 0;
  std::optional<ExactScalar> parameter;  // cycle case
  std::optional<ExactScalar> holonomy;   // cycle case
  bool relations_ok = false;
  bool irreducible_ok = false;
  bool r_rep_ok = false;
  AValueClass a_class = AValueClass::One;
  AnyRep rep;

  bool certified() const {
    return relations_ok && irreducible_ok && r_rep_ok && a_class == AValueClass::One;
  }
};

namespace detail {
template <class K>
ClassifyEntry certify(MatrixRep<K> rep, std::string kind,
                      std::optional<ExactScalar> parameter,
                      const std::vector<int>* cycle) {
  ClassifyEntry e;
  e.kind = std::move(kind);
  e.dim = rep.dim();
  e.parameter = std::move(parameter);
  e.relations_ok = !check_relations(rep).has_value();
  e.irreducible_ok = irreducible(rep).value_or(false);
  e.r_rep_ok = is_r_rep(rep).ok;
  e.a_class = classify_a_value(rep).verdict;
  if (cycle && e.r_rep_ok) e.holonomy = ExactScalar(holonomy(rep, *cycle));
  e.rep = AnyRep(std::move(rep));
  return e;
}
}  // namespace detail

// Tree graphs: the unique representation (geometric modulo the radical of
// the invariant form).  One-cycle graphs: one certified V_x per sample, with
// its holonomy; distinct holonomies certify pairwise non-isomorphism.
inline std::vector<ClassifyEntry> classify(const CoxeterGraph& g,
                                           const std::vector<ExactScalar>& samples) {
  if (!g.connected() || !g.simply_laced())
    throw std::invalid_argument("classify: need a connected simply laced graph");
  int cycles = g.cycle_count();
  if (cycles >= 2)
    throw std::invalid_argument("classify: graphs with two or more cycles are unsupported");

  std::vector<ClassifyEntry> out;
  if (cycles == 0) {
    auto geom = geometric_rep_rational(g);
    auto rad = form_radical(g);
    out.push_back(detail::certify(quotient(geom, rad), "tree-unique", std::nullopt, nullptr));
    return out;
  }
  auto cycle = find_cycle(g);
  for (const auto& sample : samples) {
    if (auto* q = std::get_if<Rational>(&sample)) {
      RationalField k;
      auto vx = build_vx(g, k, *q, cycle);
      auto ux = fixed_subspace(vx);
      out.push_back(detail::certify(quotient(vx, ux), "cycle-family", sample, &cycle));
    } else {
      const auto& c = std::get<CycloNumber>(sample);
      CycloField k(c.conductor());
      auto vx = build_vx(g, k, c, cycle);
      auto ux = fixed_subspace(vx);
      out.push_back(detail::certify(quotient(vx, ux), "cycle-family", sample, &cycle));
    }
  }
  return out;
}

}  // namespace coxcell
