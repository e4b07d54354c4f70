#pragma once

// Explicit representations of the finite dihedral group
// D_m = <r, t | r^2 = t^2 = (rt)^m = e>:
//
//   rho_k (1 <= k <= m/2), in the basis (beta_r, beta_t):
//       r |-> [[-1, c], [0, 1]],  t |-> [[1, 0], [c, -1]],  c = 2cos(k pi/m),
//   the one-dimensional kinds: trivial, sign, and for even m the pair
//   eps_r: r -> -1, t -> 1 and eps_t: r -> 1, t -> -1.
//
// rho_k is irreducible for k < m/2; rho_{m/2} (m even) splits as
// eps_r + eps_t and is allowed here as a convenience.  decompose() computes
// multiplicities of the irreducible kinds by exact character sums over all
// 2m group elements; the characters are read off the explicit matrices.
// cwrt_matrix() evaluates the q = 1 specialization of C_{w_rt},
//
//   w_rt + (-1)^m e + sum_{i=1}^{m-1} (-1)^i (r_{m-i} + t_{m-i}),
//
// on any pair of matrices satisfying the D_m relations, over any exact field.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcell/fields.hpp"
#include "coxcell/matrix.hpp"

namespace coxcell {

enum class DihedralKind { Trivial, Sign, EpsR, EpsT, Rho };

struct DihedralIrrepKey {
  DihedralKind kind = DihedralKind::Trivial;
  int k = 0;  // set for Rho only

  friend bool operator<(const DihedralIrrepKey& a, const DihedralIrrepKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.k < b.k;
  }
  friend bool operator==(const DihedralIrrepKey& a, const DihedralIrrepKey& b) {
    return a.kind == b.kind && a.k == b.k;
  }

  std::string str() const {
    switch (kind) {
      case DihedralKind::Trivial: return "trivial";
      case DihedralKind::Sign: return "sign";
      case DihedralKind::EpsR: return "eps_r";
      case DihedralKind::EpsT: return "eps_t";
      case DihedralKind::Rho: return "rho:" + std::to_string(k);
    }
    return "?";
  }
};

struct DihedralIrrep {
  int m = 2;
  DihedralIrrepKey key;
  CycloField field;                 // Q(zeta_2m)
  Matrix<CycloField> r_mat, t_mat;  // generator matrices, basis (beta_r, beta_t)

  size_t dim() const { return r_mat.rows(); }
};

// Validity: eps_r/eps_t and rho(m/2) need m even; rho(k) needs 1 <= k <= m/2.
inline DihedralIrrep dihedral_rep(int m, DihedralIrrepKey key) {
  if (m < 2) throw std::invalid_argument("dihedral_rep: m must be >= 2");
  CycloField f(2 * m);
  auto scalar_rep = [&](long rv, long tv) {
    Matrix<CycloField> r(1, 1, f.from_int(rv)), t(1, 1, f.from_int(tv));
    return DihedralIrrep{m, key, f, std::move(r), std::move(t)};
  };
  switch (key.kind) {
    case DihedralKind::Trivial: return scalar_rep(1, 1);
    case DihedralKind::Sign: return scalar_rep(-1, -1);
    case DihedralKind::EpsR:
      if (m % 2 != 0) throw std::invalid_argument("eps_r needs even m");
      return scalar_rep(-1, 1);
    case DihedralKind::EpsT:
      if (m % 2 != 0) throw std::invalid_argument("eps_t needs even m");
      return scalar_rep(1, -1);
    case DihedralKind::Rho: {
      if (key.k < 1 || 2 * key.k > m)
        throw std::invalid_argument("rho(k) needs 1 <= k <= m/2");
      CycloNumber c = two_cos(key.k, m, 2 * m);
      Matrix<CycloField> r(2, 2, f.zero()), t(2, 2, f.zero());
      r.at(0, 0) = f.from_int(-1);
      r.at(0, 1) = c;
      r.at(1, 1) = f.one();
      t.at(0, 0) = f.one();
      t.at(1, 0) = c;
      t.at(1, 1) = f.from_int(-1);
      return DihedralIrrep{m, key, f, std::move(r), std::move(t)};
    }
  }
  throw std::invalid_argument("bad dihedral kind");
}

// The irreducible kinds of D_m.
inline std::vector<DihedralIrrepKey> dihedral_irreducibles(int m) {
  std::vector<DihedralIrrepKey> keys{{DihedralKind::Trivial, 0}, {DihedralKind::Sign, 0}};
  if (m % 2 == 0) {
    keys.push_back({DihedralKind::EpsR, 0});
    keys.push_back({DihedralKind::EpsT, 0});
  }
  for (int k = 1; 2 * k < m; ++k) keys.push_back({DihedralKind::Rho, k});
  return keys;
}

template <class K>
bool dihedral_relations_hold(const Matrix<K>& r, const Matrix<K>& t, int m, const K& k) {
  if (r.rows() != r.cols() || t.rows() != t.cols() || r.rows() != t.rows()) return false;
  auto id = Matrix<K>::identity(r.rows(), k);
  return r * r == id && t * t == id && (r * t).pow(m, k) == id;
}

// rho(r_j) or rho(t_j): alternating product of j factors starting with `first`.
template <class K>
Matrix<K> alternating_product(const Matrix<K>& r, const Matrix<K>& t, bool start_r,
                              int j, const K& k) {
  Matrix<K> out = Matrix<K>::identity(r.rows(), k);
  for (int i = 0; i < j; ++i) {
    bool use_r = (i % 2 == 0) == start_r;
    out = out * (use_r ? r : t);
  }
  return out;
}

// Matrix of the specialized C_{w_rt} on any pair satisfying the relations.
template <class K>
Matrix<K> cwrt_matrix(const Matrix<K>& r, const Matrix<K>& t, int m, const K& k) {
  if (!dihedral_relations_hold(r, t, m, k))
    throw std::invalid_argument("cwrt_matrix: dihedral relations fail");
  bool even = m % 2 == 0;
  Matrix<K> out = alternating_product(r, t, true, m, k);  // w_rt
  auto id = Matrix<K>::identity(r.rows(), k);
  out = even ? out + id : out - id;                       // (-1)^m e
  for (int i = 1; i < m; ++i) {
    Matrix<K> term = alternating_product(r, t, true, m - i, k) +
                     alternating_product(r, t, false, m - i, k);
    out = (i % 2 == 0) ? out + term : out - term;
  }
  return out;
}

namespace detail {
inline CycloNumber lift_scalar(const Rational& x, long conductor) {
  return CycloNumber::from_rational(x, conductor);
}
inline CycloNumber lift_scalar(const CycloNumber& x, long conductor) {
  return x.promoted(conductor);
}
}  // namespace detail

// Multiplicities of the irreducible kinds in an arbitrary exact matrix pair
// satisfying the D_m relations, via character inner products
//   <chi_V, chi_k> = (1/2m) sum_g chi_V(g) chi_k(g^{-1})
// evaluated over all 2m elements.  Throws on relation failure and on
// non-integer multiplicities (inconsistent input).
template <class K>
std::map<DihedralIrrepKey, long> dihedral_decompose(const Matrix<K>& r,
                                                    const Matrix<K>& t, int m,
                                                    const K& field) {
  if (!dihedral_relations_hold(r, t, m, field))
    throw std::invalid_argument("decompose: dihedral relations fail");
  long n = 2 * m;
  if constexpr (std::is_same_v<K, CycloField>) n = std::lcm(n, field.conductor);

  // Element table: (start_r, j) with j = 0 and j = m listed once.
  struct Elem { bool start_r; int j; };
  std::vector<Elem> elems{{true, 0}};
  for (int j = 1; j < m; ++j) {
    elems.push_back({true, j});
    elems.push_back({false, j});
  }
  elems.push_back({true, m});
  auto inverse_of = [m](const Elem& g) -> Elem {
    if (g.j % 2 == 1 || g.j == 0 || g.j == m) return g;  // palindromes and e, w_rt
    return {!g.start_r, g.j};
  };

  // Input character, lifted to Q(zeta_n).
  std::map<std::pair<bool, int>, CycloNumber> chi_v;
  for (const auto& g : elems) {
    auto mat = alternating_product(r, t, g.start_r, g.j, field);
    chi_v.emplace(std::make_pair(g.start_r, g.j), detail::lift_scalar(mat.trace(), n));
  }

  std::map<DihedralIrrepKey, long> mult;
  for (const auto& key : dihedral_irreducibles(m)) {
    DihedralIrrep irrep = dihedral_rep(m, key);
    CycloNumber sum = CycloNumber::zero(n);
    for (const auto& g : elems) {
      Elem gi = inverse_of(g);
      auto mat = alternating_product(irrep.r_mat, irrep.t_mat, gi.start_r, gi.j, irrep.field);
      sum += chi_v.at({g.start_r, g.j}) * mat.trace().promoted(n);
    }
    if (!sum.is_rational()) throw std::domain_error("decompose: non-rational multiplicity");
    Rational q = sum.rational_value() / Rational(2 * m);
    if (!is_integer(q) || q < 0)
      throw std::domain_error("decompose: non-integer multiplicity (inconsistent input)");
    long count = static_cast<long>(q.get_num().get_si());
    if (count > 0) mult.emplace(key, count);
  }
  return mult;
}

inline std::map<DihedralIrrepKey, long> dihedral_decompose(const DihedralIrrep& rep) {
  return dihedral_decompose(rep.r_mat, rep.t_mat, rep.m, rep.field);
}

}  // namespace coxcell
