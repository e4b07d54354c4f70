#pragma once

// JSON (de)serialization for every type that crosses the CLI boundary.
// Uses ordered_json so emitted key order is deterministic: element-keyed
// maps are inserted in ShortLex order of the canonical words.
//
// Scalar formats: rationals are "p/q" strings; cyclotomic numbers are
// {"conductor": n, "coeffs": ["p/q", ...]}; Laurent and q-polynomials are
// maps from degree strings to integer coefficients, e.g. {"-1": -1, "1": -1}.

#include <json.hpp>

#include <string>
#include <vector>

#include "coxcell/dihedral.hpp"
#include "coxcell/fields.hpp"
#include "coxcell/graph.hpp"
#include "coxcell/kl.hpp"
#include "coxcell/rep.hpp"
#include "coxcell/rrep.hpp"
#include "coxcell/words.hpp"

namespace coxcell {

using Json = nlohmann::ordered_json;

// ---- scalars ---------------------------------------------------------------

inline Json to_json(const BigInt& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer too large for JSON output");
  return Json(n.get_si());
}

inline Json to_json(const Rational& r) { return Json(to_string(r)); }

inline Json to_json(const CycloNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Json to_json(const ExactScalar& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected a rational scalar (\"p/q\" string)");
}

inline CycloNumber cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw std::invalid_argument("expected {\"conductor\", \"coeffs\"}");
  long n = j.at("conductor").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return CycloNumber(n, std::move(coeffs));
}

inline ExactScalar scalar_from_json(const Json& j) {
  if (j.is_object()) return cyclo_from_json(j);
  return rational_from_json(j);
}

// ---- polynomials -----------------------------------------------------------

inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = to_json(c);
  return j;
}

inline Json to_json(const IntPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = to_json(c);
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.add_term(std::stol(it.key()), BigInt(static_cast<long>(it.value().get<long long>())));
  return p;
}

// ---- graphs and elements -----------------------------------------------------

inline Json to_json(const CoxeterGraph& g) {
  Json gens = Json::array();
  for (const auto& l : g.generators()) gens.push_back(l);
  Json edges = Json::array();
  for (auto [a, b] : g.coxeter_edges()) {
    Json e{{"a", g.label(a)}, {"b", g.label(b)}};
    e["m"] = g.order(a, b) == kInfiniteOrder ? Json("inf") : Json(g.order(a, b));
    edges.push_back(std::move(e));
  }
  return Json{{"generators", gens}, {"edges", edges}};
}

inline CoxeterGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw std::invalid_argument("graph JSON needs a \"generators\" array");
  std::vector<std::string> gens;
  for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
  std::vector<CoxeterEdge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      CoxeterEdge edge;
      edge.a = e.at("a").get<std::string>();
      edge.b = e.at("b").get<std::string>();
      const auto& m = e.at("m");
      if (m.is_string()) {
        if (m.get<std::string>() != "inf")
          throw std::invalid_argument("edge order must be an integer >= 2 or \"inf\"");
        edge.m = kInfiniteOrder;
      } else {
        edge.m = m.get<int>();
      }
      edges.push_back(std::move(edge));
    }
  }
  return CoxeterGraph::validate(std::move(gens), edges);
}

inline Json element_to_json(const CoxeterSystem& sys, const Element& w) {
  Json letters = Json::array();
  for (int s : w.word) letters.push_back(sys.graph().label(s));
  return letters;
}

// ---- representations ---------------------------------------------------------

template <class K>
Json to_json(const MatrixRep<K>& rep) {
  Json field;
  if constexpr (std::is_same_v<K, RationalField>)
    field = Json{{"type", "rational"}};
  else
    field = Json{{"type", "cyclotomic"}, {"conductor", rep.field.conductor}};
  Json mats = Json::object();
  for (int s = 0; s < rep.graph.size(); ++s) {
    Json rows = Json::array();
    for (size_t i = 0; i < rep.dim(); ++i) {
      Json row = Json::array();
      for (size_t j = 0; j < rep.dim(); ++j) row.push_back(to_json(rep.mat(s).at(i, j)));
      rows.push_back(std::move(row));
    }
    mats[rep.graph.label(s)] = std::move(rows);
  }
  return Json{{"graph", to_json(rep.graph)},
              {"field", field},
              {"dim", rep.dim()},
              {"matrices", mats}};
}

inline Json to_json(const AnyRep& rep) {
  return std::visit([](const auto& r) { return to_json(r); }, rep);
}

namespace detail {
template <class K>
MatrixRep<K> rep_matrices_from_json(const Json& j, CoxeterGraph graph, const K& field) {
  size_t dim = j.at("dim").get<size_t>();
  if (dim == 0) throw std::invalid_argument("rep dim must be positive");
  const Json& mats = j.at("matrices");
  MatrixRep<K> rep{std::move(graph), field, {}};
  for (int s = 0; s < rep.graph.size(); ++s) {
    const Json& rows = mats.at(rep.graph.label(s));
    if (rows.size() != dim) throw std::invalid_argument("matrix row count != dim");
    Matrix<K> m(dim, dim, field.zero());
    for (size_t i = 0; i < dim; ++i) {
      if (rows[i].size() != dim) throw std::invalid_argument("matrix column count != dim");
      for (size_t jj = 0; jj < dim; ++jj) {
        const Json& cell = rows[i][jj];
        if constexpr (std::is_same_v<K, RationalField>) {
          m.at(i, jj) = rational_from_json(cell);
        } else {
          if (cell.is_object()) {
            CycloNumber c = cyclo_from_json(cell);
            if (c.conductor() != field.conductor)
              throw std::invalid_argument("matrix entry conductor differs from the field");
            m.at(i, jj) = std::move(c);
          } else {
            m.at(i, jj) = CycloNumber::from_rational(rational_from_json(cell), field.conductor);
          }
        }
      }
    }
    rep.mats.push_back(std::move(m));
  }
  return rep;
}
}  // namespace detail

inline AnyRep rep_from_json(const Json& j) {
  CoxeterGraph graph = graph_from_json(j.at("graph"));
  const Json& field = j.at("field");
  std::string type = field.at("type").get<std::string>();
  if (type == "rational")
    return detail::rep_matrices_from_json(j, std::move(graph), RationalField{});
  if (type == "cyclotomic")
    return detail::rep_matrices_from_json(j, std::move(graph),
                                          CycloField(field.at("conductor").get<long>()));
  throw std::invalid_argument("field type must be \"rational\" or \"cyclotomic\"");
}

// ---- analysis reports ---------------------------------------------------------

template <class K>
Json to_json(const A1Report<K>& report, const CoxeterGraph& g) {
  Json j{{"a_value", a_value_class_str(report.verdict)}};
  if (report.witness) {
    Json vec = Json::array();
    for (const auto& c : report.witness->vec) vec.push_back(to_json(c));
    j["witness"] = Json{{"r", g.label(report.witness->r)},
                        {"t", g.label(report.witness->t)},
                        {"vector", vec}};
  }
  return j;
}

inline Json to_json(const RRepCheck& check) {
  Json j{{"r_rep", check.ok}};
  if (!check.ok) {
    j["failed_condition"] = check.failed_condition;
    j["detail"] = check.detail;
  }
  return j;
}

inline Json kind_to_json(const DihedralIrrepKey& key) {
  if (key.kind == DihedralKind::Rho) return Json{{"rho", key.k}};
  return Json(key.str());
}

inline Json to_json(const DihedralIrrep& rep) {
  auto mat_json = [&](const Matrix<CycloField>& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return Json{{"m", rep.m},
              {"kind", kind_to_json(rep.key)},
              {"matrices", Json{{"r", mat_json(rep.r_mat)}, {"t", mat_json(rep.t_mat)}}}};
}

inline Json multiplicities_to_json(int m, const std::map<DihedralIrrepKey, long>& mult) {
  Json j = Json::object();
  for (const auto& key : dihedral_irreducibles(m)) {
    auto it = mult.find(key);
    j[key.str()] = it == mult.end() ? 0 : it->second;
  }
  return Json{{"multiplicities", j}};
}

inline Json to_json(const ClassifyEntry& e) {
  Json j{{"kind", e.kind}, {"dim", e.dim}};
  j["parameter"] = e.parameter ? to_json(*e.parameter) : Json(nullptr);
  j["holonomy"] = e.holonomy ? to_json(*e.holonomy) : Json(nullptr);
  j["certificates"] = Json{{"relations", e.relations_ok},
                           {"irreducible", e.irreducible_ok},
                           {"r_rep", e.r_rep_ok},
                           {"a_value", a_value_class_str(e.a_class)}};
  return j;
}

// ---- finite-group reports -------------------------------------------------------

inline Json kl_to_json(const KLContext& ctx) {
  const GroupTable& g = ctx.group();
  Json elements = Json::array();
  for (int i = 0; i < g.size(); ++i) elements.push_back(g.word_string(i));
  Json P = Json::object(), mu = Json::object();
  for (int w = 0; w < g.size(); ++w) {
    Json row = Json::object(), murow = Json::object();
    for (int y = 0; y < g.size(); ++y) {
      if (!g.bruhat_leq(y, w)) continue;
      row[g.word_string(y)] = to_json(ctx.kl_poly(y, w));
      if (ctx.mu(y, w) != 0) murow[g.word_string(y)] = ctx.mu(y, w);
    }
    P[g.word_string(w)] = std::move(row);
    if (!murow.empty()) mu[g.word_string(w)] = std::move(murow);
  }
  return Json{{"elements", elements}, {"P", P}, {"mu", mu}};
}

inline Json a_report_to_json(const StructureConstants& sc) {
  const GroupTable& g = sc.context().group();
  Json j = Json::object();
  for (int w = 0; w < g.size(); ++w) j[g.word_string(w)] = sc.a_value(w);
  return j;
}

inline Json cells_to_json(const KLContext& ctx, const CellPartition& cells) {
  const GroupTable& g = ctx.group();
  Json blocks = Json::array();
  for (const auto& block : cells.blocks) {
    Json b = Json::array();
    for (int w : block) b.push_back(g.word_string(w));
    blocks.push_back(std::move(b));
  }
  Json order = Json::array();
  size_t n = cells.blocks.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && cells.block_leq[i][j]) order.push_back(Json::array({i, j}));
  return Json{{"cells", blocks}, {"order", order}};
}

inline Json h_constants_to_json(const StructureConstants& sc) {
  const GroupTable& g = sc.context().group();
  Json j = Json::object();
  for (int x = 0; x < g.size(); ++x) {
    Json xrow = Json::object();
    for (int y = 0; y < g.size(); ++y) {
      Json yrow = Json::object();
      for (const auto& [w, h] : sc.row(x, y)) yrow[g.word_string(w)] = to_json(h);
      xrow[g.word_string(y)] = std::move(yrow);
    }
    j[g.word_string(x)] = std::move(xrow);
  }
  return j;
}

}  // namespace coxcell
