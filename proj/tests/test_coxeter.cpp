#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "coxcell/graph.hpp"
#include "coxcell/words.hpp"

using namespace coxcell;

namespace {

// Independent oracle: concrete permutation models of the small groups.
// Words multiply as permutations, so element equality and group order can be
// checked without any reduction machinery.
using Perm = std::vector<int>;

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}
Perm perm_mul(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

// D_m as symmetries of an m-gon: r(i) = -i, t(i) = 1 - i (mod m).
std::vector<Perm> dihedral_perm_gens(int m) {
  Perm r(m), t(m);
  for (int i = 0; i < m; ++i) {
    r[i] = ((m - i) % m + m) % m;
    t[i] = ((1 - i) % m + m) % m;
  }
  return {r, t};
}

// A_n as the symmetric group S_{n+1}, s_i the adjacent transposition.
std::vector<Perm> symmetric_perm_gens(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) {
    Perm p = perm_identity(n + 1);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return gens;
}

Perm eval_word(const std::vector<Perm>& gens, const Word& w, int points) {
  Perm p = perm_identity(points);
  for (int s : w) p = perm_mul(p, gens[s]);
  return p;
}

std::vector<Word> all_words(int alphabet, int max_len) {
  std::vector<Word> out{{}};
  size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i)
      for (int s = 0; s < alphabet; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return out;
}

bool is_subsequence(const Word& needle, const Word& hay) {
  size_t i = 0;
  for (int x : hay)
    if (i < needle.size() && needle[i] == x) ++i;
  return i == needle.size();
}

// Independent Bruhat oracle (subword property): y <= w iff some reduced word
// of y is a subsequence of the canonical word of w.
bool bruhat_subword_oracle(const CoxeterSystem& sys, const Element& y, const Element& w) {
  for (const Word& u : sys.braid_closure(y.word))
    if (is_subsequence(u, w.word)) return true;
  return false;
}

}  // namespace

TEST_CASE("graph validation and derived flags") {
  auto g = CoxeterGraph::validate({"r", "t"}, {{"r", "t", 3}});
  CHECK(g.simply_laced());
  CHECK(g.connected());
  CHECK(g.cycle_count() == 0);
  CHECK(g.order(0, 1) == 3);
  CHECK(g.order(1, 0) == 3);

  auto tri = triangle_graph();
  CHECK(tri.cycle_count() == 1);
  CHECK(tri.simply_laced());

  CHECK(dihedral_graph(4).simply_laced() == false);
  CHECK(dihedral_graph(2).connected() == false);  // no m >= 3 edge

  auto inf = CoxeterGraph::validate({"a", "b"}, {{"a", "b", kInfiniteOrder}});
  CHECK(!inf.simply_laced());
  CHECK(!inf.finite_order(0, 1));

  CHECK_THROWS(CoxeterGraph::validate({"r", "t"}, {{"r", "t", 1}}));
  CHECK_THROWS(CoxeterGraph::validate({"r", "r"}, {}));
  CHECK_THROWS(CoxeterGraph::validate({"r", "t"}, {{"r", "u", 3}}));
  CHECK_THROWS(CoxeterGraph::validate({"e", "t"}, {}));
}

TEST_CASE("braid closure") {
  CoxeterSystem d3(dihedral_graph(3));
  const int r = 0, t = 1;

  auto rtr = d3.braid_closure({r, t, r});
  CHECK(rtr.size() == 2);
  CHECK(std::count(rtr.begin(), rtr.end(), Word{r, t, r}) == 1);
  CHECK(std::count(rtr.begin(), rtr.end(), Word{t, r, t}) == 1);

  CHECK(d3.braid_closure({r}) == std::vector<Word>{{r}});
  CHECK_THROWS(d3.braid_closure({r, r}));  // not reduced

  CoxeterSystem a3(type_a_graph(3));
  auto s1s3 = a3.braid_closure({0, 2});  // commuting move
  CHECK(s1s3.size() == 2);
}

TEST_CASE("normal form in D3, cross-checked against the permutation oracle") {
  CoxeterSystem d3(dihedral_graph(3));
  const int r = 0, t = 1;
  auto gens = dihedral_perm_gens(3);

  CHECK(d3.normal_form({r, r}) == d3.identity());
  CHECK(d3.normal_form({t, r, t}).word == Word{r, t, r});  // ShortLex min of {trt, rtr}
  CHECK(d3.normal_form({r, t, r, t}).word == Word{t, r});  // (rt)^2 = tr in D3

  // Oracle: every word of length <= 6 reduces to an element representing the
  // same permutation, and canonical words of equal permutations coincide.
  std::map<Perm, Word> canon_by_perm;
  for (const Word& w : all_words(2, 6)) {
    Element e = d3.normal_form(w);
    CHECK(eval_word(gens, w, 3) == eval_word(gens, e.word, 3));
    auto [it, fresh] = canon_by_perm.emplace(eval_word(gens, w, 3), e.word);
    if (!fresh) CHECK(it->second == e.word);
  }
  CHECK(canon_by_perm.size() == 6);
}

TEST_CASE("normal form is idempotent and constant on braid orbits (length <= 6)") {
  std::vector<CoxeterGraph> graphs{dihedral_graph(3), dihedral_graph(4), type_a_graph(3)};
  for (const auto& g : graphs) {
    CoxeterSystem sys(g);
    for (const Word& w : all_words(g.size(), 6)) {
      Element e = sys.normal_form(w);
      CHECK(sys.normal_form(e.word) == e);
      if (static_cast<int>(w.size()) == e.length()) {
        // w reduced: whole closure must canonicalize identically.
        for (const Word& u : sys.braid_closure(w)) CHECK(sys.normal_form(u) == e);
      }
    }
  }
}

TEST_CASE("multiply") {
  CoxeterSystem d3(dihedral_graph(3));
  const int r = 0, t = 1;
  Element w = d3.normal_form({r, t});
  CHECK(d3.multiply(d3.identity(), w) == w);
  CHECK(d3.multiply(d3.generator(r), d3.generator(r)) == d3.identity());
  Element tr = d3.normal_form({t, r});
  CHECK(d3.multiply(w, tr) == d3.identity());
  CHECK_THROWS_AS(d3.multiply(w, w, 3), std::length_error);

  // Subadditivity of length over all pairs in D3.
  auto en = d3.enumerate();
  std::vector<Element> all;
  for (auto& level : en.levels) all.insert(all.end(), level.begin(), level.end());
  for (auto& a : all)
    for (auto& b : all) CHECK(d3.multiply(a, b).length() <= a.length() + b.length());
}

TEST_CASE("descents") {
  CoxeterSystem d3(dihedral_graph(3));
  const int r = 0, t = 1;
  auto [le, re] = d3.descents(d3.identity());
  CHECK(le.empty());
  CHECK(re.empty());

  Element wrt = d3.normal_form({r, t, r});
  auto [lw, rw] = d3.descents(wrt);
  CHECK(lw == std::vector<int>{r, t});  // rtr = trt: both shorten
  CHECK(rw == std::vector<int>{r, t});

  Element rt = d3.normal_form({r, t});
  auto [lrt, rrt] = d3.descents(rt);
  CHECK(lrt == std::vector<int>{r});  // t(rt) = trt is longer
  CHECK(rrt == std::vector<int>{t});
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  CoxeterSystem d3(dihedral_graph(3));
  const int r = 0, t = 1;
  CHECK(d3.bruhat_leq(d3.identity(), d3.normal_form({r, t, r})));
  CHECK(d3.bruhat_leq(d3.generator(r), d3.normal_form({t, r})));

  std::vector<CoxeterGraph> graphs{dihedral_graph(2), dihedral_graph(3), dihedral_graph(4),
                                   dihedral_graph(5), type_a_graph(3)};
  for (const auto& g : graphs) {
    CoxeterSystem sys(g);
    auto en = sys.enumerate();
    REQUIRE(en.exhausted);
    std::vector<Element> all;
    for (auto& level : en.levels) all.insert(all.end(), level.begin(), level.end());
    for (auto& y : all)
      for (auto& w : all)
        CHECK(sys.bruhat_leq(y, w) == bruhat_subword_oracle(sys, y, w));
  }

  // In dihedral groups: y <= w iff l(y) < l(w) or y = w.
  for (int m = 2; m <= 7; ++m) {
    CoxeterSystem sys(dihedral_graph(m));
    auto en = sys.enumerate();
    std::vector<Element> all;
    for (auto& level : en.levels) all.insert(all.end(), level.begin(), level.end());
    for (auto& y : all)
      for (auto& w : all)
        CHECK(sys.bruhat_leq(y, w) == (y.length() < w.length() || y == w));
  }
}

TEST_CASE("enumerate level sizes and totals") {
  CoxeterSystem d2(dihedral_graph(2));
  auto e2 = d2.enumerate();
  REQUIRE(e2.exhausted);
  std::vector<size_t> sizes2;
  for (auto& l : e2.levels) sizes2.push_back(l.size());
  CHECK(sizes2 == std::vector<size_t>{1, 2, 1});

  CoxeterSystem d3(dihedral_graph(3));
  auto e3 = d3.enumerate();
  REQUIRE(e3.exhausted);
  std::vector<size_t> sizes3;
  for (auto& l : e3.levels) sizes3.push_back(l.size());
  CHECK(sizes3 == std::vector<size_t>{1, 2, 2, 1});

  CoxeterSystem a3(type_a_graph(3));
  auto ea = a3.enumerate();
  REQUIRE(ea.exhausted);
  CHECK(ea.total() == 24);

  // BFS matches the permutation model: canonical forms biject onto S4 and
  // word length equals the inversion number.
  auto gens = symmetric_perm_gens(3);
  std::set<Perm> perms;
  for (auto& level : ea.levels)
    for (auto& w : level) {
      Perm p = eval_word(gens, w.word, 4);
      int inversions = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (p[i] > p[j]) ++inversions;
      CHECK(inversions == w.length());
      perms.insert(p);
    }
  CHECK(perms.size() == 24);

  // Infinite group: cap trips, no exhaustion.
  CoxeterSystem tri(triangle_graph());
  auto et = tri.enumerate(6, 2000);
  CHECK(!et.exhausted);
}

TEST_CASE("unique reduced expressions") {
  for (int m = 2; m <= 7; ++m) {
    CoxeterSystem sys(dihedral_graph(m));
    auto en = sys.enumerate();
    int unique_count = 0;
    for (auto& level : en.levels)
      for (auto& w : level)
        if (!w.is_identity() && sys.unique_reduced_expression(w)) ++unique_count;
    CHECK(unique_count == 2 * (m - 1));  // everything except e and w_rt
    CHECK(sys.unique_reduced_expression(sys.identity()));
    Element wrt = sys.alternating_word(0, 1, m);
    CHECK(!sys.unique_reduced_expression(wrt));
    for (int s : {0, 1}) CHECK(sys.unique_reduced_expression(sys.generator(s)));
  }
}

TEST_CASE("alternating words") {
  CoxeterSystem d5(dihedral_graph(5));
  const int r = 0, t = 1;
  CHECK(d5.alternating_word(r, t, 0) == d5.identity());
  CHECK(d5.alternating_word(r, t, 2).word == Word{r, t});
  CHECK(d5.alternating_word(r, t, 5) == d5.alternating_word(t, r, 5));  // w_rt
  CHECK(d5.alternating_word(r, t, 5).length() == 5);
  CHECK_THROWS(d5.alternating_word(r, t, 6));
  CHECK_THROWS(d5.alternating_word(r, r, 2));
}

TEST_CASE("word strings and parsing") {
  CoxeterSystem d3(dihedral_graph(3));
  CHECK(d3.word_string(d3.identity()) == "e");
  CHECK(d3.word_string(d3.normal_form({0, 1, 0})) == "rtr");
  CHECK(d3.parse_word("rtr") == d3.normal_form({0, 1, 0}));
  CHECK(d3.parse_word("e") == d3.identity());

  CoxeterSystem a3(type_a_graph(3));
  Element w = a3.normal_form({1, 0, 2, 1});
  CHECK(a3.word_string(w) == "s2.s1.s3.s2");
  CHECK(a3.parse_word("s2.s1.s3.s2") == w);
}
