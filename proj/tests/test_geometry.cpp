#include <random>

#include "doctest.h"
#include "jetsym/expression.hpp"
#include "jetsym/geometry.hpp"

using namespace jetsym;

namespace {

VectorField F(const VarList& v, std::vector<std::pair<std::string, std::string>> c) { return VectorField::parse(v, c); }

VarList hc_vars() { return make_varlist({"x", "y", "z", "z1", "z2"}); }

Distribution hilbert_cartan() {
  auto v = hc_vars();
  return Distribution(v, {F(v, {{"x", "1"}, {"z", "z1"}, {"z1", "z2"}, {"y", "z2^2"}}), F(v, {{"z2", "1"}})});
}

VectorField random_poly_field(std::mt19937_64& rng, const VarList& v) {
  std::uniform_int_distribution<int> c(-3, 3), pick(0, static_cast<int>(v->size()) - 1), e(0, 2);
  VectorField f(v);
  for (std::size_t i = 0; i < v->size(); ++i) {
    RationalFunction comp(v);
    for (int t = 0; t < 3; ++t) {
      RationalFunction mono(v, c(rng));
      const int deg = e(rng);
      for (int k = 0; k < deg; ++k) mono *= RationalFunction::variable(v, (*v)[static_cast<std::size_t>(pick(rng))]);
      comp += mono;
    }
    f[i] = comp;
  }
  return f;
}

}  // namespace

TEST_CASE("lie bracket examples") {
  auto v = make_varlist({"x", "u", "p"});
  auto D = F(v, {{"x", "1"}, {"u", "p"}});
  auto dp = VectorField::coordinate(v, "p");
  CHECK(lie_bracket(D, dp) == -VectorField::coordinate(v, "u"));
  CHECK(lie_bracket(VectorField::coordinate(v, "x"), VectorField::coordinate(v, "u")).is_zero());
  auto w = make_varlist({"y"});
  CHECK_THROWS_AS(lie_bracket(D, VectorField::coordinate(w, "y")), ChartMismatch);
}

TEST_CASE("bracket antisymmetry and Jacobi on random polynomial fields") {
  std::mt19937_64 rng(3);
  auto v = make_varlist({"a", "b", "c", "d", "e", "f"});
  for (int t = 0; t < 6; ++t) {
    auto x = random_poly_field(rng, v), y = random_poly_field(rng, v), z = random_poly_field(rng, v);
    CHECK(lie_bracket(x, y) == -lie_bracket(y, x));
    auto j = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    CHECK(j.is_zero());
  }
}

TEST_CASE("generic rank and annihilator") {
  auto v = make_varlist({"x", "u", "p"});
  auto dx = VectorField::coordinate(v, "x");
  CHECK(generic_rank(Distribution(v, {dx, RationalFunction(v, 2) * dx})) == 1);
  Distribution c(v, {F(v, {{"x", "1"}, {"u", "p"}}), VectorField::coordinate(v, "p")});
  CHECK(generic_rank(c) == 2);
  auto th = annihilator(c);
  REQUIRE(th.size() == 1);
  // proportional to du - p dx
  const auto& f = th[0].comp;
  CHECK(f[1] * parse_expression("-p", v) == f[0]);
  CHECK(f[2].is_zero());
  for (const auto& g : c.generators()) CHECK(th[0](g).is_zero());

  auto w = make_varlist({"x", "y"});
  Distribution one(w, {VectorField::coordinate(w, "x")});
  auto a = annihilator(one);
  REQUIRE(a.size() == 1);
  CHECK(a[0].comp[0].is_zero());
  CHECK(a[0].comp[1].is_one());
}

TEST_CASE("flags of Hilbert-Cartan and integrable distributions") {
  auto hc = hilbert_cartan();
  auto wf = weak_flag(hc);
  CHECK(wf.growth == std::vector<std::size_t>{2, 1, 2});
  CHECK(wf.stabilized);
  // oracle: the three brackets written out by hand
  auto v = hc_vars();
  auto X1 = hc.generators()[0], X2 = hc.generators()[1];
  auto X3 = lie_bracket(X1, X2);
  CHECK(X3 == F(v, {{"z1", "-1"}, {"y", "-2*z2"}}));
  auto X4 = lie_bracket(X1, X3), X5 = lie_bracket(X2, X3);
  CHECK(X4 == F(v, {{"z", "1"}}));
  CHECK(X5 == F(v, {{"y", "-2"}}));
  CHECK(strong_flag(hc).growth == std::vector<std::size_t>{2, 1, 2});

  auto w = make_varlist({"x", "y"});
  Distribution flat(w, {VectorField::coordinate(w, "x"), VectorField::coordinate(w, "y")});
  auto f = weak_flag(flat);
  CHECK(f.growth == std::vector<std::size_t>{2});
  CHECK(f.stabilized);
}

TEST_CASE("weak steps are nested and the strong flag dominates") {
  auto hc = hilbert_cartan();
  auto pr = prolong_rank2(hc).dist;
  auto wf = weak_flag(pr), sf = strong_flag(pr);
  for (std::size_t i = 0; i + 1 < wf.steps.size(); ++i)
    for (const auto& b : wf.steps[i].basis()) CHECK(wf.steps[i + 1].contains(b));
  for (std::size_t i = 0; i < std::min(wf.steps.size(), sf.steps.size()); ++i)
    CHECK(sf.steps[i].rank() >= wf.steps[i].rank());
}

TEST_CASE("cauchy characteristics") {
  auto w = make_varlist({"x", "y"});
  Distribution flat(w, {VectorField::coordinate(w, "x"), VectorField::coordinate(w, "y")});
  CHECK(spans_equal(cauchy_characteristics(flat), flat));

  auto v = make_varlist({"x", "y", "z", "w"});
  Distribution d(v, {VectorField::coordinate(v, "x"), VectorField::coordinate(v, "y"), F(v, {{"z", "1"}, {"w", "x"}})});
  auto ch = cauchy_characteristics(d);
  CHECK(spans_equal(ch, Distribution(v, {VectorField::coordinate(v, "y")})));
  // Ch in D, [Ch, D] in D, Ch involutive
  for (const auto& c : ch.basis()) {
    CHECK(d.contains(c));
    for (const auto& g : d.basis()) CHECK(d.contains(lie_bracket(c, g)));
  }
  CHECK(is_involutive(ch));
  CHECK(cauchy_characteristics(hilbert_cartan()).rank() == 0);
}

TEST_CASE("reduce along a slice") {
  auto w = make_varlist({"x", "y"});
  Distribution d(w, {VectorField::coordinate(w, "x"), VectorField::coordinate(w, "y")});
  Distribution pi(w, {VectorField::coordinate(w, "y")});
  auto r = reduce_along(d, pi, {{"y", 0}});
  CHECK(*r.chart == std::vector<std::string>{"x"});
  CHECK(r.dist.rank() == 1);
  CHECK(r.dist.contains(VectorField::coordinate(r.chart, "x")));
  CHECK_THROWS_AS(reduce_along(d, pi, {{"x", 0}}), Error);
  CHECK_THROWS_AS(reduce_along(d, pi, {{"x", 0}, {"y", 0}}), Error);
}

TEST_CASE("prolongation and de-prolongation") {
  auto w = make_varlist({"x", "y"});
  Distribution d(w, {VectorField::coordinate(w, "x"), VectorField::coordinate(w, "y")});
  auto p = prolong_rank2(d);
  CHECK(p.dist.contains(F(p.chart, {{"x", "1"}, {"y", "t"}})));
  CHECK(weak_flag(p.dist).growth == std::vector<std::size_t>{2, 1});
  // the square of an integrable plane's prolongation is everything
  CHECK(derived(p.dist).rank() == 3);
  CHECK_FALSE(deprolong(p.dist).possible);

  // fiber is Cauchy for the square of a non-integrable prolongation
  auto hp = prolong_rank2(hilbert_cartan());
  CHECK(spans_equal(cauchy_characteristics(derived(hp.dist)),
                    Distribution(hp.chart, {VectorField::coordinate(hp.chart, "t")})));

  // Goursat tower over the contact distribution, then back down to dimension 3
  Distribution cur = p.dist;
  std::vector<Reduction> tower = {p};
  for (int i = 0; i < 3; ++i) {
    auto next = prolong_rank2(cur, "t" + std::to_string(i));
    tower.push_back(next);
    cur = next.dist;
  }
  CHECK(weak_flag(cur).growth == std::vector<std::size_t>{2, 1, 1, 1, 1});
  for (int i = 2; i >= 0; --i) {
    auto dp = deprolong(cur);
    REQUIRE(dp.possible);
    const VarList& expect = tower[static_cast<std::size_t>(i)].chart;
    REQUIRE(same_vars(dp.result.chart, expect));
    cur = dp.result.dist;
    CHECK(spans_equal(cur, tower[static_cast<std::size_t>(i)].dist));
  }
  CHECK(cur.dim() == 3);

  // round trip on Hilbert-Cartan returns the original distribution
  auto hc = hilbert_cartan();
  auto back = deprolong(prolong_rank2(hc).dist);
  REQUIRE(back.possible);
  REQUIRE(same_vars(back.result.chart, hc.vars()));
  Distribution again(hc.vars(), [&] {
    std::vector<VectorField> g;
    for (const auto& b : back.result.dist.basis()) g.emplace_back(hc.vars(), b.components());
    return g;
  }());
  CHECK(spans_equal(again, hc));
  CHECK_FALSE(deprolong(hc).possible);
}

TEST_CASE("symbol algebras") {
  auto v = make_varlist({"x", "u", "p"});
  Distribution c(v, {F(v, {{"x", "1"}, {"u", "p"}}), VectorField::coordinate(v, "p")});
  auto s = symbol_algebra(c, std::uint64_t{0});
  CHECK(s.algebra.negative_layer_dims() == std::vector<std::size_t>{2, 1});
  CHECK_FALSE(jacobi_check(s.algebra));
  CHECK(verify_nk(s.algebra, s.algebra.unit(0), s.algebra.unit(1)).pass);

  auto w = make_varlist({"x", "y"});
  Distribution flat(w, {VectorField::coordinate(w, "x"), VectorField::coordinate(w, "y")});
  auto a = symbol_algebra(flat, std::uint64_t{0});
  CHECK(a.algebra.negative_layer_dims() == std::vector<std::size_t>{2});
  CHECK(is_zero(std::vector<RationalFunction>{}));

  auto hc = symbol_algebra(hilbert_cartan(), std::uint64_t{0});
  CHECK(hc.algebra.negative_layer_dims() == std::vector<std::size_t>{2, 1, 2});
  CHECK_FALSE(jacobi_check(hc.algebra));
  auto t = tanaka_prolong(hc.algebra, 6);
  CHECK(t.total_dim() == 14);
  // two independent points give the same growth
  auto hc2 = symbol_algebra(hilbert_cartan(), std::uint64_t{17});
  CHECK(hc2.algebra.negative_layer_dims() == hc.algebra.negative_layer_dims());
}

TEST_CASE("symbol extraction rejects a non-generic point") {
  auto v = make_varlist({"x", "y", "z"});
  // <d_x, d_y + x d_z>: bracket d_z everywhere, but at x = 0 the second field is d_y
  Distribution d(v, {VectorField::coordinate(v, "x"), F(v, {{"y", "1"}, {"z", "x^2"}})});
  CHECK_THROWS_AS(symbol_algebra(d, PointAssignment{0, 1, 1}), GenericityError);
  CHECK_NOTHROW(symbol_algebra(d, PointAssignment{1, 1, 1}));
}

TEST_CASE("ad closure") {
  auto w = make_varlist({"x", "y"});
  Distribution dx(w, {VectorField::coordinate(w, "x")}), dy(w, {VectorField::coordinate(w, "y")});
  CHECK(spans_equal(ad_closure(dx, dy), dx));
  auto v = make_varlist({"x", "y", "z"});
  Distribution a(v, {VectorField::coordinate(v, "x")});
  Distribution p(v, {F(v, {{"y", "1"}, {"z", "x"}})});
  auto cl = ad_closure(a, p);
  CHECK(cl.rank() == 2);
  CHECK(cl.contains(VectorField::coordinate(v, "z")));
}
