// coxcell: exact Kazhdan-Lusztig data and reflection-representation analysis
// for small Coxeter groups.
//
// Exit codes: 0 = success (and, where applicable, the queried property
// holds); 1 = the computation succeeded but the property fails (e.g. a
// common -1 eigenvector witness was found); 2 = usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxcell/coxcell.hpp"

namespace {

using namespace coxcell;

constexpr int kDefaultLengthCap = 12;
constexpr size_t kDefaultSizeCap = 2000;

struct Options {
  std::string graph_path, rep_path, out_path, element, format = "json";
  std::vector<std::string> x_values;
  int cap = kDefaultLengthCap;
  bool h_table = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::invalid_argument("cannot write " + opt.out_path);
  out << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

CoxeterGraph load_graph(const Options& opt) {
  if (opt.graph_path.empty()) throw std::invalid_argument("--graph is required");
  return graph_from_json(read_json_file(opt.graph_path));
}

AnyRep load_rep(const Options& opt) {
  if (opt.rep_path.empty()) throw std::invalid_argument("--rep is required");
  return rep_from_json(read_json_file(opt.rep_path));
}

ExactScalar parse_x(const std::string& text) {
  if (!text.empty() && text.front() == '{') return scalar_from_json(Json::parse(text));
  return ExactScalar(parse_rational(text));
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int cmd_graph_validate(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  Json j = to_json(g);
  j["connected"] = g.connected();
  j["simply_laced"] = g.simply_laced();
  j["cycle_count"] = g.cycle_count();
  emit_json(opt, j);
  return 0;
}

int cmd_enumerate(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  CoxeterSystem sys(g);
  Enumeration en = sys.enumerate(opt.cap, kDefaultSizeCap);
  if (opt.format == "dot") {
    // Bruhat covering digraph on the enumerated elements.
    std::vector<Element> all;
    for (auto& l : en.levels) all.insert(all.end(), l.begin(), l.end());
    std::ostringstream os;
    os << "digraph bruhat {\n  rankdir=BT;\n";
    for (const auto& w : all) os << "  \"" << dot_escape(sys.word_string(w)) << "\";\n";
    for (const auto& y : all)
      for (const auto& w : all)
        if (w.length() == y.length() + 1 && sys.bruhat_leq(y, w))
          os << "  \"" << dot_escape(sys.word_string(y)) << "\" -> \""
             << dot_escape(sys.word_string(w)) << "\";\n";
    os << "}\n";
    emit(opt, os.str());
    return 0;
  }
  Json levels = Json::array();
  for (auto& l : en.levels) {
    Json level = Json::array();
    for (auto& w : l) level.push_back(sys.word_string(w));
    levels.push_back(std::move(level));
  }
  emit_json(opt, Json{{"levels", levels}, {"total", en.total()}, {"exhausted", en.exhausted}});
  return 0;
}

int cmd_kl(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  CoxeterSystem sys(g);
  KLContext ctx(sys, opt.cap, kDefaultSizeCap);
  emit_json(opt, kl_to_json(ctx));
  return 0;
}

int cmd_afunction(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  CoxeterSystem sys(g);
  KLContext ctx(sys, opt.cap, kDefaultSizeCap);
  StructureConstants sc(ctx);
  if (opt.h_table)
    emit_json(opt, Json{{"a", a_report_to_json(sc)}, {"h", h_constants_to_json(sc)}});
  else
    emit_json(opt, a_report_to_json(sc));
  return 0;
}

int cmd_cells(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  CoxeterSystem sys(g);
  KLContext ctx(sys, opt.cap, kDefaultSizeCap);
  CellPartition cells = lr_cells(ctx);
  if (opt.format == "dot") {
    const GroupTable& gt = ctx.group();
    size_t n = cells.blocks.size();
    std::ostringstream os;
    os << "digraph cells {\n  rankdir=BT;\n";
    for (size_t i = 0; i < n; ++i) {
      os << "  c" << i << " [label=\"{";
      for (size_t k = 0; k < cells.blocks[i].size(); ++k)
        os << (k ? "," : "") << dot_escape(gt.word_string(cells.blocks[i][k]));
      os << "}\"];\n";
    }
    // Covering edges of the block order, drawn upward from lower cells.
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j || !cells.block_leq[i][j]) continue;
        bool covering = true;
        for (size_t k = 0; k < n && covering; ++k)
          if (k != i && k != j && cells.block_leq[i][k] && cells.block_leq[k][j])
            covering = false;
        if (covering) os << "  c" << i << " -> c" << j << ";\n";
      }
    os << "}\n";
    emit(opt, os.str());
    return 0;
  }
  emit_json(opt, cells_to_json(ctx, cells));
  return 0;
}

int cmd_specialize(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  CoxeterSystem sys(g);
  KLContext ctx(sys, opt.cap, kDefaultSizeCap);
  const GroupTable& gt = ctx.group();
  auto emit_one = [&](int w) {
    Json j = Json::object();
    for (const auto& [y, n] : specialize_q1_indexed(ctx.c_basis(w)))
      j[gt.word_string(y)] = to_json(n);
    return j;
  };
  if (!opt.element.empty()) {
    int w = gt.index(sys.parse_word(opt.element));
    emit_json(opt, Json{{"element", gt.word_string(w)}, {"c_basis_q1", emit_one(w)}});
  } else {
    Json all = Json::object();
    for (int w = 0; w < gt.size(); ++w) all[gt.word_string(w)] = emit_one(w);
    emit_json(opt, Json{{"c_basis_q1", all}});
  }
  return 0;
}

int cmd_dihedral_decompose(const Options& opt) {
  AnyRep rep = load_rep(opt);
  return std::visit(
      [&](const auto& r) {
        const CoxeterGraph& g = r.graph;
        if (g.size() != 2 || !g.finite_order(0, 1))
          throw std::invalid_argument("dihedral-decompose needs a finite 2-generator graph");
        int m = g.order(0, 1);
        auto mult = dihedral_decompose(r.mat(0), r.mat(1), m, r.field);
        Json j = multiplicities_to_json(m, mult);
        j["m"] = m;
        emit_json(opt, j);
        return 0;
      },
      rep);
}

int cmd_rep_check(const Options& opt) {
  AnyRep rep = load_rep(opt);
  return std::visit(
      [&](const auto& r) {
        if (auto err = check_relations(r))
          throw std::invalid_argument("relations fail: " + *err);
        auto report = classify_a_value(r);
        Json j = to_json(report, r.graph);
        j["relations"] = "ok";
        j["cwrt_annihilation"] = cwrt_annihilation(r);
        if (r.graph.simply_laced()) j["r_rep"] = to_json(is_r_rep(r));
        emit_json(opt, j);
        return report.verdict == AValueClass::GreaterThanOne ? 1 : 0;
      },
      rep);
}

int cmd_rrep_build(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  if (!g.connected() || !g.simply_laced())
    throw std::invalid_argument("rrep-build needs a connected simply laced graph");
  int cycles = g.cycle_count();
  if (cycles >= 2) throw std::invalid_argument("graphs with two or more cycles are unsupported");
  if (cycles == 0) {
    if (!opt.x_values.empty())
      throw std::invalid_argument("--x applies only to one-cycle graphs");
    auto rep = quotient(geometric_rep_rational(g), form_radical(g));
    emit_json(opt, to_json(rep));
    return 0;
  }
  if (opt.x_values.size() != 1)
    throw std::invalid_argument("one-cycle graphs need exactly one --x parameter");
  ExactScalar x = parse_x(opt.x_values.front());
  if (scalar_is_zero(x)) throw std::domain_error("parameter x must be nonzero");
  auto cycle = find_cycle(g);
  AnyRep out = std::visit(
      [&](const auto& xv) -> AnyRep {
        using T = std::decay_t<decltype(xv)>;
        if constexpr (std::is_same_v<T, Rational>) {
          RationalField k;
          auto rep = build_vx(g, k, xv, cycle);
          return AnyRep(quotient(rep, fixed_subspace(rep)));
        } else {
          CycloField k(xv.conductor());
          auto rep = build_vx(g, k, xv, cycle);
          return AnyRep(quotient(rep, fixed_subspace(rep)));
        }
      },
      x);
  emit_json(opt, to_json(out));
  return 0;
}

int cmd_rrep_classify(const Options& opt) {
  CoxeterGraph g = load_graph(opt);
  std::vector<ExactScalar> samples;
  for (const auto& s : opt.x_values) samples.push_back(parse_x(s));
  if (samples.empty() && g.cycle_count() == 1)
    samples = {ExactScalar(Rational(1)), ExactScalar(Rational(2)),
               ExactScalar(Rational(-1)), ExactScalar(make_rational(1, 2))};
  auto catalog = classify(g, samples);
  Json j = Json::array();
  bool all_certified = true;
  for (const auto& e : catalog) {
    all_certified = all_certified && e.certified();
    j.push_back(to_json(e));
  }
  emit_json(opt, j);
  return all_certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kazhdan-Lusztig data and a-value-1 representation analysis"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("COXCELL_CAP")) opt.cap = std::atoi(env);

  auto add_common = [&](CLI::App* cmd, bool graph, bool rep) {
    if (graph) cmd->add_option("--graph", opt.graph_path, "graph JSON file");
    if (rep) cmd->add_option("--rep", opt.rep_path, "representation JSON file");
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--cap", opt.cap, "length cap for enumeration");
    return cmd;
  };

  auto* validate = add_common(app.add_subcommand("graph-validate", "validate a graph"), true, false);
  auto* enumerate = add_common(app.add_subcommand("enumerate", "list elements by length"), true, false);
  enumerate->add_option("--format", opt.format, "json or dot");
  auto* kl = add_common(app.add_subcommand("kl", "Kazhdan-Lusztig P and mu tables"), true, false);
  auto* afn = add_common(app.add_subcommand("afunction", "a-function values"), true, false);
  afn->add_flag("--h-table", opt.h_table, "also emit every structure constant h_{x,y,w}");
  auto* cells = add_common(app.add_subcommand("cells", "two-sided cells"), true, false);
  cells->add_option("--format", opt.format, "json or dot");
  auto* spec = add_common(app.add_subcommand("specialize", "C basis at q = 1"), true, false);
  spec->add_option("--element", opt.element, "canonical word (default: all)");
  auto* dd = add_common(app.add_subcommand("dihedral-decompose", "irreducible multiplicities"), false, true);
  auto* rc = add_common(app.add_subcommand("rep-check", "a-value class of a representation"), false, true);
  auto* rb = add_common(app.add_subcommand("rrep-build", "build the a-value-1 representation"), true, false);
  rb->add_option("--x", opt.x_values, "cycle parameter (\"p/q\" or cyclotomic JSON)");
  auto* rcl = add_common(app.add_subcommand("rrep-classify", "certified catalog"), true, false);
  rcl->add_option("--x", opt.x_values, "cycle parameter samples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_graph_validate(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (kl->parsed()) return cmd_kl(opt);
    if (afn->parsed()) return cmd_afunction(opt);
    if (cells->parsed()) return cmd_cells(opt);
    if (spec->parsed()) return cmd_specialize(opt);
    if (dd->parsed()) return cmd_dihedral_decompose(opt);
    if (rc->parsed()) return cmd_rep_check(opt);
    if (rb->parsed()) return cmd_rrep_build(opt);
    if (rcl->parsed()) return cmd_rrep_classify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
