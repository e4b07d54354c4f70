#pragma once

// Analysis of finite-dimensional exact matrix representations of a Coxeter
// group: relation checking, +-1 eigenspaces, the common-(-1)-eigenvector
// criterion deciding whether the a-function value is 0, 1 or > 1, the
// equivalent C_{w_rt}-annihilation test, and the R-representation predicate
// (minus-eigenspaces are lines, pairwise intersecting in zero, jointly
// spanning).  Every verdict is an exact zero/nonzero decision.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coxcell/dihedral.hpp"
#include "coxcell/fields.hpp"
#include "coxcell/graph.hpp"
#include "coxcell/matrix.hpp"

namespace coxcell {

template <class K>
struct MatrixRep {
  CoxeterGraph graph;
  K field;
  std::vector<Matrix<K>> mats;  // one square matrix per generator, all same size

  size_t dim() const { return mats.empty() ? 0 : mats.front().rows(); }
  const Matrix<K>& mat(int s) const { return mats.at(s); }
};

using AnyRep = std::variant<MatrixRep<RationalField>, MatrixRep<CycloField>>;

template <class K>
MatrixRep<K> direct_sum_rep(const MatrixRep<K>& a, const MatrixRep<K>& b) {
  if (a.graph.generators() != b.graph.generators())
    throw std::invalid_argument("direct sum needs matching graphs");
  MatrixRep<K> r{a.graph, a.field, {}};
  for (size_t s = 0; s < a.mats.size(); ++s)
    r.mats.push_back(direct_sum(a.mats[s], b.mats[s], a.field));
  return r;
}

inline MatrixRep<CycloField> to_matrix_rep(const DihedralIrrep& d) {
  return MatrixRep<CycloField>{dihedral_graph(d.m), d.field, {d.r_mat, d.t_mat}};
}

// nullopt when all relations hold, else a description of the first failure.
template <class K>
std::optional<std::string> check_relations(const MatrixRep<K>& rep) {
  const auto& g = rep.graph;
  if (rep.mats.size() != static_cast<size_t>(g.size()))
    return "wrong number of generator matrices";
  size_t d = rep.dim();
  if (d == 0) return "empty representation";
  for (const auto& m : rep.mats)
    if (m.rows() != d || m.cols() != d) return "non-square or mismatched matrix";
  auto id = Matrix<K>::identity(d, rep.field);
  for (int s = 0; s < g.size(); ++s)
    if (!(rep.mat(s) * rep.mat(s) == id))
      return "rho(" + g.label(s) + ")^2 != I";
  for (int r = 0; r < g.size(); ++r)
    for (int t = r + 1; t < g.size(); ++t) {
      int m = g.order(r, t);
      if (m == kInfiniteOrder) continue;
      if (!((rep.mat(r) * rep.mat(t)).pow(m, rep.field) == id))
        return "(rho(" + g.label(r) + ")rho(" + g.label(t) + "))^" +
               std::to_string(m) + " != I";
    }
  return std::nullopt;
}

template <class K>
void require_relations(const MatrixRep<K>& rep) {
  if (auto err = check_relations(rep))
    throw std::invalid_argument("relations fail: " + *err);
}

template <class K>
using VectorBasis = std::vector<std::vector<typename K::Scalar>>;

// Basis of the (-1)-eigenspace of rho(s); checks V = V_s^+ (+) V_s^-.
template <class K>
VectorBasis<K> minus_eigenspace(const MatrixRep<K>& rep, int s) {
  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  auto minus = kernel_basis(rep.mat(s) + id, rep.field);
  auto plus = kernel_basis(rep.mat(s) - id, rep.field);
  if (minus.size() + plus.size() != rep.dim())
    throw std::logic_error("eigenspace decomposition failed");
  return minus;
}

template <class K>
VectorBasis<K> plus_eigenspace(const MatrixRep<K>& rep, int s) {
  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  return kernel_basis(rep.mat(s) - id, rep.field);
}

// Basis of the common fixed space of all generators.
template <class K>
VectorBasis<K> fixed_subspace(const MatrixRep<K>& rep) {
  require_relations(rep);
  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  Matrix<K> stack = rep.mat(0) - id;
  for (int s = 1; s < rep.graph.size(); ++s) stack = vstack(stack, rep.mat(s) - id);
  return kernel_basis(stack, rep.field);
}

enum class AValueClass { Zero, One, GreaterThanOne };

inline std::string a_value_class_str(AValueClass c) {
  switch (c) {
    case AValueClass::Zero: return "0";
    case AValueClass::One: return "1";
    case AValueClass::GreaterThanOne: return ">1";
  }
  return "?";
}

template <class K>
struct A1Witness {
  int r, t;  // generator indices with m_rt finite
  std::vector<typename K::Scalar> vec;  // nonzero, rho(r)v = rho(t)v = -v
};

template <class K>
struct A1Report {
  AValueClass verdict = AValueClass::One;
  std::optional<A1Witness<K>> witness;  // present iff verdict is GreaterThanOne
};

// The eigenvector criterion: passes iff no pair r != t with m_rt finite has a
// common eigenvector of eigenvalue -1; otherwise returns one such vector.
template <class K>
std::optional<A1Witness<K>> a1_criterion_witness(const MatrixRep<K>& rep) {
  require_relations(rep);
  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  for (int r = 0; r < rep.graph.size(); ++r)
    for (int t = r + 1; t < rep.graph.size(); ++t) {
      if (!rep.graph.finite_order(r, t)) continue;  // the criterion skips m = infinity
      auto common =
          kernel_basis(vstack(rep.mat(r) + id, rep.mat(t) + id), rep.field);
      if (!common.empty()) return A1Witness<K>{r, t, common.front()};
    }
  return std::nullopt;
}

template <class K>
bool a1_criterion(const MatrixRep<K>& rep) {
  return !a1_criterion_witness(rep).has_value();
}

// Equivalent test: the specialized C_{w_rt} kills the space for every finite
// pair.
template <class K>
bool cwrt_annihilation(const MatrixRep<K>& rep) {
  require_relations(rep);
  for (int r = 0; r < rep.graph.size(); ++r)
    for (int t = r + 1; t < rep.graph.size(); ++t) {
      int m = rep.graph.order(r, t);
      if (m == kInfiniteOrder) continue;
      if (!cwrt_matrix(rep.mat(r), rep.mat(t), m, rep.field).is_zero()) return false;
    }
  return true;
}

// Trichotomy: trivial action -> 0; criterion passes -> 1; else > 1 with a
// witness.  ">1" reports the class only, not the exact value.
template <class K>
A1Report<K> classify_a_value(const MatrixRep<K>& rep) {
  require_relations(rep);
  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  bool trivial = true;
  for (const auto& m : rep.mats) trivial = trivial && m == id;
  if (trivial) return {AValueClass::Zero, std::nullopt};
  if (auto w = a1_criterion_witness(rep)) return {AValueClass::GreaterThanOne, std::move(w)};
  return {AValueClass::One, std::nullopt};
}

struct RRepCheck {
  bool ok = false;
  int failed_condition = 0;  // 1, 2 or 3 per the definition; 0 when ok
  std::string detail;
};

// R-representation test for simply laced graphs: (1) the minus eigenspaces
// span, (2) they pairwise intersect in zero, (3) each is a line.
template <class K>
RRepCheck is_r_rep(const MatrixRep<K>& rep) {
  if (!rep.graph.simply_laced())
    throw std::invalid_argument("is_r_rep requires a simply laced graph");
  require_relations(rep);
  const K& k = rep.field;
  std::vector<VectorBasis<K>> minus;
  for (int s = 0; s < rep.graph.size(); ++s) minus.push_back(minus_eigenspace(rep, s));

  SpanTracker<K> span(k);
  for (const auto& basis : minus)
    for (const auto& v : basis) span.insert(v);
  if (span.dimension() != rep.dim())
    return {false, 1, "sum of minus eigenspaces has dimension " +
                          std::to_string(span.dimension()) + " < " +
                          std::to_string(rep.dim())};

  auto id = Matrix<K>::identity(rep.dim(), rep.field);
  for (int r = 0; r < rep.graph.size(); ++r)
    for (int t = r + 1; t < rep.graph.size(); ++t) {
      auto common = kernel_basis(vstack(rep.mat(r) + id, rep.mat(t) + id), k);
      if (!common.empty())
        return {false, 2, "minus eigenspaces of " + rep.graph.label(r) + " and " +
                              rep.graph.label(t) + " intersect"};
    }

  for (int s = 0; s < rep.graph.size(); ++s)
    if (minus[s].size() != 1)
      return {false, 3, "dim V_" + rep.graph.label(s) + "^- = " +
                            std::to_string(minus[s].size())};
  return {true, 0, ""};
}

}  // namespace coxcell
