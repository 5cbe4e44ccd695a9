#include <algorithm>
#include <random>

#include "doctest.h"
#include "jetsym/analysis.hpp"

using namespace jetsym;

namespace {

std::map<std::string, std::string> monge_to_ek_names(unsigned k) {
  std::map<std::string, std::string> out;
  for (const auto& [from, to] : ek_to_monge_names(k)) out[to] = from;
  return out;
}

std::vector<std::pair<std::string, VectorField>> prolonged_point_fields(unsigned k) {
  const auto y = monge_y(k);
  std::vector<std::pair<std::string, VectorField>> out;
  for (const auto& pf : ek_point_fields(k)) out.emplace_back(pf.name, point_prolongation(pf, y));
  return out;
}

Distribution contact3() {
  const auto v = make_varlist({"x", "u", "p"});
  return Distribution(v, {VectorField::parse(v, {{"x", "1"}, {"u", "p"}}), VectorField::coordinate(v, "p")});
}

QVector combination(const CommutatorTable& t, const std::vector<std::pair<std::string, Rational>>& value) {
  QVector out(t.names.size());
  for (const auto& [name, c] : value) {
    const auto it = std::find(t.names.begin(), t.names.end(), name);
    REQUIRE(it != t.names.end());
    out[static_cast<std::size_t>(it - t.names.begin())] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("check_N on the worked examples") {
  const auto g = check_N(reduce_equation(goursat_pair()).reduced.dist);
  CHECK_FALSE(g.pass);
  CHECK(g.strong_growth == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(g.s == 0);

  const auto e3 = check_N(reduce_equation(ek(3)).reduced.dist);
  CHECK(e3.pass);
  CHECK(e3.s == 3);
  CHECK(e3.strong_growth == std::vector<std::size_t>{2, 1, 2, 3});

  // The first jump of 2 happens at s = 4; the flag then stops because
  // s exp(-r) is a first integral of this instance.
  const auto mixed = check_N(reduce_equation(e2e3_generic()).reduced.dist);
  CHECK(mixed.pass);
  CHECK(mixed.s == 4);
  CHECK(mixed.strong_growth == std::vector<std::size_t>{2, 1, 1, 2});
}

TEST_CASE("non-degeneracy suite") {
  SUBCASE("E_3 is sufficiently non-degenerate") {
    const auto r = nondegeneracy_suite(ek(3));
    CHECK(r.applicable);
    CHECK(r.rejected.empty());
    CHECK(r.n.s == 3);
    // n = 2, s = 3: ranks n+s-4, n+s-3, n+s-2 and rank upsilon = s-2.
    CHECK(r.rank_square == 1);
    CHECK(r.rank_upsilon_pi == 2);
    CHECK(r.rank_nabla == 3);
    CHECK(r.rank_upsilon == 1);
    CHECK(r.chain.pass);
    CHECK(r.r.pass);
    CHECK(r.r_plus.pass);
    CHECK(r.uses_g_prime);
    CHECK(r.g.pass);
    CHECK(r.sufficiently_nondegenerate());
  }
  SUBCASE("first-order equations are rejected before any computation") {
    const auto r = nondegeneracy_suite(s8_2e2e1());
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.rejected.empty());
    CHECK_FALSE(r.sufficiently_nondegenerate());
  }
  SUBCASE("Goursat reductions fail (N)") {
    for (bool bar : {false, true}) {
      const auto r = nondegeneracy_suite(goursat_pair(bar));
      CHECK_FALSE(r.n.pass);
      CHECK_FALSE(r.sufficiently_nondegenerate());
    }
  }
}

TEST_CASE("symmetries of a distribution") {
  const auto red = reduce_equation(ek(3)).reduced;
  const auto& v = red.chart;
  const auto lam = verify_symmetry_of_distribution(red.dist, VectorField::coordinate(v, "lam"));
  CHECK_FALSE(lam.pass);
  CHECK_FALSE(lam.detail.empty());
  CHECK(verify_symmetry_of_distribution(red.dist, VectorField::coordinate(v, "u")).pass);
  // A section of a distribution is a symmetry exactly when it is a Cauchy characteristic.
  for (const auto& g : red.dist.generators()) CHECK_FALSE(verify_symmetry_of_distribution(red.dist, g).pass);
  const auto pr = reduce_equation(ek(3));
  for (const auto& xi : pr.pi.basis()) CHECK(verify_symmetry_of_distribution(pr.cartan, xi).pass);
}

TEST_CASE("point prolongation to the Monge chart") {
  const auto y = monge_y(3);
  const auto& v = y.vars();
  CHECK(point_prolongation({"X", {{"x", "1"}}}, y) == VectorField::coordinate(v, "x"));

  const auto fields = prolonged_point_fields(3);
  const auto& L = std::find_if(fields.begin(), fields.end(), [](const auto& f) { return f.first == "L"; })->second;
  CHECK(L.component("lam").is_one());

  const auto d = y.distribution();
  const auto red = reduce_equation(ek(3)).reduced;
  const auto rename = monge_to_ek_names(3);
  for (const auto& [name, X] : fields) {
    CHECK_MESSAGE(verify_symmetry_of_distribution(d, X).pass, name);
    CHECK_MESSAGE(verify_symmetry_of_distribution(red.dist, rename_chart(X, red.chart, rename)).pass, name);
  }
  // W_0^0 is the bare coordinate field.
  CHECK(fields[1].second == VectorField::coordinate(v, "w0"));
}

TEST_CASE("point prolongation rejects fields that need derivatives of the parameter") {
  const auto y = monge_y(3);
  CHECK_THROWS_AS(point_prolongation({"bad", {{"w0", "lam"}}}, y), Error);
}

TEST_CASE("commutator table of the E_k point symmetries") {
  for (unsigned k : {3u, 4u}) {
    CAPTURE(k);
    const auto t = commutator_table(prolonged_point_fields(k));
    REQUIRE(t.independent);
    REQUIRE(t.closed);
    CHECK(t.names.size() == k * (k + 1) / 2 + 6);
    for (const auto& rel : ek_relations(k)) {
      CAPTURE(rel.a);
      CAPTURE(rel.b);
      CHECK(t.bracket(rel.a, rel.b) == combination(t, rel.value));
      QVector neg = combination(t, rel.value);
      for (auto& c : neg) c = -c;
      CHECK(t.bracket(rel.b, rel.a) == neg);
    }
    const auto a = t.as_algebra();
    CHECK_FALSE(jacobi_check(a).has_value());
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(a.bracket(i, i) == QVector(a.dim()));

    CHECK(grading_check(t, ek_weights(k)).pass);
    CHECK(grading_check(t, ek_bigrading(k)).pass);
    const auto bi = ek_bigrading(k);
    for (const auto& [name, w] : ek_weights(k)) {
      const auto& b = bi.at(name);
      CHECK(w[0] == b[0] + b[1]);
    }
    auto perturbed = ek_weights(k);
    perturbed["T"] = {1};
    const auto bad = grading_check(t, perturbed);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.witness.empty());
  }
}

TEST_CASE("the displayed brackets omit the scaling action on X") {
  const auto t = commutator_table(prolonged_point_fields(3));
  CHECK(t.bracket("X", "S1") == combination(t, {{"X", Rational(1)}}));
  bool listed = false;
  for (const auto& rel : ek_relations(3))
    listed = listed || ((rel.a == "X" && rel.b == "S1") || (rel.a == "S1" && rel.b == "X"));
  CHECK_FALSE(listed);
}

TEST_CASE("polynomial symmetry solver") {
  SUBCASE("d/dx on a line") {
    const auto v = make_varlist({"x"});
    const Distribution d(v, {VectorField::coordinate(v, "x")});
    CHECK(solve_polynomial_symmetries(d, 2).dimension() == 3);
    CHECK(solve_polynomial_symmetries(d, 0).dimension() == 1);
  }
  SUBCASE("contact plane, affine fields") {
    // Independent oracle: generating functions 1, x, p, u, xp give contact
    // fields of degree <= 1; any quadratic f gives a degree 2 component.
    const auto d = contact3();
    const auto res = solve_polynomial_symmetries(d, 1);
    CHECK(res.dimension() == 5);
    const auto& v = d.vars();
    const std::vector<VectorField> oracle = {
        VectorField::parse(v, {{"u", "1"}}),
        VectorField::parse(v, {{"u", "x"}, {"p", "1"}}),
        VectorField::parse(v, {{"x", "-1"}}),
        VectorField::parse(v, {{"u", "u"}, {"p", "p"}}),
        VectorField::parse(v, {{"x", "-x"}, {"p", "p"}}),
    };
    CHECK(rank_over_q(oracle) == 5);
    std::vector<VectorField> both = res.basis;
    both.insert(both.end(), oracle.begin(), oracle.end());
    CHECK(rank_over_q(both) == 5);
  }
  SUBCASE("monotone in the degree, every field verified") {
    const auto d = contact3();
    std::vector<VectorField> prev;
    for (int deg = 0; deg <= 2; ++deg) {
      const auto res = solve_polynomial_symmetries(d, deg);
      for (const auto& X : res.basis) CHECK(verify_symmetry_of_distribution(d, X).pass);
      std::vector<VectorField> both = res.basis;
      both.insert(both.end(), prev.begin(), prev.end());
      CHECK(rank_over_q(both) == res.dimension());
      CHECK(res.dimension() >= prev.size());
      prev = res.basis;
    }
  }
  SUBCASE("budget") {
    SolverOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(solve_polynomial_symmetries(contact3(), 2, tiny), BudgetExceeded);
  }
}

TEST_CASE("weighted solver on the E_3 reduction") {
  const auto red = reduce_equation(ek(3)).reduced;
  SolverOptions o;
  o.weights = ek_reduction_weights(3);
  const auto res = solve_polynomial_symmetries(red.dist, 0, o);
  CHECK(res.dimension() == 12);
  std::vector<VectorField> listed;
  const auto rename = monge_to_ek_names(3);
  for (const auto& [name, X] : prolonged_point_fields(3)) listed.push_back(rename_chart(X, red.chart, rename));
  std::vector<VectorField> both = res.basis;
  both.insert(both.end(), listed.begin(), listed.end());
  CHECK(rank_over_q(both) == 12);
}

TEST_CASE("Tanaka upper bounds") {
  const auto e3 = tanaka_upper_bound(reduce_equation(ek(3)).reduced.dist);
  CHECK(e3.bounded);
  CHECK(e3.value == 12);
  CHECK(e3.tanaka.layer_dim(0) == 4);

  const auto hc = tanaka_upper_bound(hilbert_cartan());
  CHECK(hc.symbol.algebra.negative_layer_dims() == std::vector<std::size_t>{2, 1, 2});
  CHECK(hc.value == 14);

  const auto kl = tanaka_upper_bound(monge_kl({0, 1, 2}).distribution());
  CHECK(kl.bounded);
  CHECK(kl.value == 11);
}

TEST_CASE("restriction homomorphism on E_3") {
  const auto e = ek(3);
  const auto red = reduce_equation(e).reduced;
  std::vector<VectorField> target;
  const auto rename = monge_to_ek_names(3);
  for (const auto& [name, X] : prolonged_point_fields(3)) target.push_back(rename_chart(X, red.chart, rename));
  const auto rep = lbt_report(e, ek_generating_functions(3), &target);
  CHECK(rep.entries.size() == 12);
  for (const auto& en : rep.entries) {
    CHECK_MESSAGE(en.external, en.label);
    CHECK(en.pushed_symmetry);
  }
  CHECK(rep.source_rank == 12);
  CHECK(rep.image_rank == 12);
  CHECK(rep.injective());
  CHECK(rep.reduced_nonholonomic);
  REQUIRE(rep.matches_target.has_value());
  CHECK(*rep.matches_target);

  // Pushforward commutes with brackets on five seeded pairs.
  const auto& pr = rep.reduction;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, rep.entries.size() - 1);
  for (int t = 0; t < 5; ++t) {
    const auto& a = rep.entries[pick(rng)];
    const auto& b = rep.entries[pick(rng)];
    const auto lhs = push_to_slice(lie_bracket(a.restricted, b.restricted), pr.pi, pr.slice, pr.reduced.chart);
    CHECK(lhs == lie_bracket(a.pushed, b.pushed));
  }
}

TEST_CASE("restriction homomorphism failures with three base variables") {
  const auto rep = lbt_report(s8_2e2e1(), {{"u_z", "u001"}, {"x u_z", "x*u001"}, {"z u_z", "z*u001"}});
  for (const auto& en : rep.entries) CHECK_MESSAGE(en.external, en.label);
  CHECK(rep.source_rank == 3);
  CHECK(rep.kernel_witnesses.size() == 3);
  CHECK(rep.kernel_dim() == 3);
  CHECK_FALSE(rep.injective());

  const auto nine = lbt_report(s8_9e3(), {});
  CHECK_FALSE(nine.reduced_nonholonomic);
  const auto ranks = weak_flag(nine.reduction.reduced.dist).ranks();
  CHECK(ranks.back() < nine.reduction.reduced.dist.dim());
}

TEST_CASE("tangent-cone reduction") {
  SUBCASE("one extra parameter") {
    const auto c = cone_reduction(rkm(3, 1));
    CHECK(c.closure_is_cartan_plus_eta);
    CHECK(c.xi_spans_cauchy);
    CHECK(c.plus.dist.rank() == 3);
    CHECK(c.plus_is_weak_derived);
    CHECK(c.plus_is_strong_derived);
  }
  SUBCASE("two extra parameters") {
    const auto c = cone_reduction(rkm(3, 2));
    const auto& v = c.cartan.vars();
    REQUIRE(c.eta.size() == 2);
    CHECK(c.eta[0] == VectorField::parse(v, {{"u20", "1"}, {"u11", "lam"}, {"u02", "lam^2"}}));
    CHECK(c.eta[1] == VectorField::parse(v, {{"u11", "1"}, {"u02", "2*lam"}}));
    CHECK(c.closure.rank() == 7);
    CHECK(c.closure_is_cartan_plus_eta);
    CHECK(c.tilde.chart->size() == 9);
    // [eta_2, xi] = d_p + lam d_q leaves the quotient distribution.
    const auto& tv = c.tilde.chart;
    const auto eta2 = VectorField::parse(tv, {{"u11", "1"}, {"u02", "2*lam"}});
    CHECK(lie_bracket(eta2, c.xi) == VectorField::parse(tv, {{"u10", "1"}, {"u01", "lam"}}));
    CHECK_FALSE(c.xi_spans_cauchy);
    CHECK(c.plus.dist.rank() == 4);
    CHECK(c.delta_weak_ranks == std::vector<std::size_t>{2, 3, 5, 8});
    CHECK_FALSE(c.plus_is_weak_derived);
    CHECK(c.plus_is_delta_with_eta);
  }
}

TEST_CASE("symbols of E_k reductions are n_{k+1}") {
  for (unsigned k : {3u, 4u}) {
    CAPTURE(k);
    const auto red = reduce_equation(ek(k)).reduced;
    const auto sym = symbol_algebra(red.dist, std::uint64_t{0});
    std::vector<std::size_t> dims = {2, 1};
    for (unsigned d = 2; d <= k; ++d) dims.push_back(d);
    CHECK(sym.algebra.negative_layer_dims() == dims);
    const auto& g = red.dist.basis();
    REQUIRE(g.size() == 2);
    const auto v = verify_nk(sym.algebra, symbol_class(sym, g[0]), symbol_class(sym, g[1]));
    CHECK(v.pass);
    CHECK(v.depth == static_cast<int>(k + 1));
  }
  const auto hc = symbol_algebra(hilbert_cartan(), std::uint64_t{0});
  const auto v = verify_nk(hc.algebra, hc.algebra.unit(0), hc.algebra.unit(1));
  CHECK(v.pass);
  CHECK(v.depth == 3);
}

TEST_CASE("the (kl) bound against the n = 2 member") {
  // m = (0, 1) is y' = (z'')^2 / 2 up to names: Hilbert-Cartan, 14 rather than 2n + 5 = 9.
  CHECK(tanaka_upper_bound(monge_kl({0, 1}).distribution()).value == 14);
  CHECK(tanaka_upper_bound(monge_kl({0, 1, 2}).distribution()).value == 11);
}
