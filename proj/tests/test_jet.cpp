#include <random>

#include "doctest.h"
#include "jetsym/catalog.hpp"
#include "jetsym/jet.hpp"

using namespace jetsym;

namespace {

RationalFunction random_j1_function(std::mt19937_64& rng, std::size_t n) {
  const auto v = jet_chart(default_base(n), 1);
  std::uniform_int_distribution<int> c(-3, 3), pick(0, static_cast<int>(v->size()) - 1), e(0, 2);
  RationalFunction f(v);
  for (int t = 0; t < 4; ++t) {
    RationalFunction mono(v, c(rng));
    const int deg = e(rng) + 1;
    for (int k = 0; k < deg; ++k) mono *= RationalFunction::variable(v, (*v)[static_cast<std::size_t>(pick(rng))]);
    f += mono;
  }
  return f;
}

}  // namespace

TEST_CASE("multi-index enumeration") {
  CHECK(multi_indices(2, 3) == std::vector<MultiIndex>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(multi_indices(3, 2).size() == 6);
  CHECK(multi_indices_upto(2, 2).size() == 6);
  CHECK(jet_name({2, 1}) == "u21");
  CHECK(jet_name({0, 0}) == "u");
  CHECK(parse_jet_name("u_xy", {"x", "y"}) == MultiIndex{1, 1});
  CHECK(parse_jet_name("t", {"x", "y"}) == MultiIndex{0, 2});
  CHECK(parse_jet_name("alpha", {"x", "y"}) == MultiIndex{3, 0});
  CHECK_FALSE(parse_jet_name("v", {"x", "y"}).has_value());
}

TEST_CASE("total derivative on E_3") {
  const auto e = ek(3);
  const auto Dx = total_derivative(e, 0);
  const auto& v = e.vars();
  auto lam = RationalFunction::variable(v, "lam");
  CHECK(Dx.component("x").is_one());
  CHECK(Dx.component("u") == RationalFunction::variable(v, "u10"));
  CHECK(Dx.component("u10") == RationalFunction::variable(v, "u20"));
  CHECK(Dx.component("u01") == RationalFunction::variable(v, "u11"));
  CHECK(Dx.component("u20") == lam);
  CHECK(Dx.component("u11") == lam.pow(2) / RationalFunction(v, 2));
  CHECK(Dx.component("u02") == lam.pow(3) / RationalFunction(v, 3));
  CHECK(Dx.component("lam").is_zero());
  CHECK(cartan_on_equation(e).rank() == 3);
}

TEST_CASE("undetermined jets are rejected") {
  CHECK_THROWS_AS(EquationChart("bad", {"x", "y"}, {"lam"}, 2, {{{2, 0}, "lam"}}), Error);
  CHECK_THROWS_AS(EquationChart("dup", {"x", "y"}, {"lam"}, 2, {{{2, 0}, "lam"}, {{2, 0}, "0"}, {{1, 1}, "0"}, {{0, 2}, "0"}}),
                  Error);
}

TEST_CASE("derived jets of mixed-order systems") {
  const auto e = s8_2e2e1();
  CHECK_FALSE(e.is_free({0, 0, 1}));
  CHECK(e.value({1, 0, 1}).is_zero());
  CHECK(e.value({0, 0, 2}).is_zero());
  CHECK(e.min_equation_order() == 1);
  CHECK(cartan_on_equation(e).rank() == 4);
  CHECK(cartan_on_equation(rkm(3, 2)).rank() == 5);

  const auto g = goursat_pair();
  CHECK(g.value({2, 1}).is_zero());
  CHECK(g.value({1, 2}).is_zero());
}

TEST_CASE("contact fields of simple generating functions") {
  const auto v = jet_chart({"x", "y"}, 1);
  const auto ux = parse_generating_function("u_x", 2);
  CHECK(contact_field(ux, 2) == -VectorField::coordinate(v, "x"));
  const auto x = parse_generating_function("x", 2);
  CHECK(contact_field(x, 2) == VectorField::parse(v, {{"u", "x"}, {"u10", "1"}}));
}

TEST_CASE("first prolongation is the contact field and round-trips through theta") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_j1_function(rng, 2);
    const auto X = contact_field(f, 2);
    CHECK(prolong_contact_field(f, 2, 1) == X);
    CHECK(generating_function(X, 2) == f);
  }
}

TEST_CASE("prolongation of the scaling and of a Galilean field") {
  // f = u scales every jet by 1.
  const auto s = prolong_contact_field(parse_generating_function("u", 2), 2, 3);
  const auto& v = s.vars();
  for (const auto& idx : multi_indices_upto(2, 3)) CHECK(s.component(jet_name(idx)) == RationalFunction::variable(v, jet_name(idx)));
  // f = y u_x + x^2/2 is the point field -y d_x + x^2/2 d_u; by hand
  // u_xx gets 1, u_xy gets u_xx and u_yy gets 2 u_xy on J^2.
  const auto g = prolong_contact_field(parse_generating_function("y*u10 + x^2/2", 2), 2, 2);
  const auto& w = g.vars();
  CHECK(g.component("x") == -RationalFunction::variable(w, "y"));
  CHECK(g.component("u20").is_one());
  CHECK(g.component("u11") == RationalFunction::variable(w, "u20"));
  CHECK(g.component("u02") == RationalFunction(w, 2) * RationalFunction::variable(w, "u11"));
}

TEST_CASE("listed generating functions are symmetries of E_k and F_k") {
  for (unsigned k : {2u, 3u, 4u}) {
    const auto e = ek(k);
    const auto list = ek_generating_functions(k);
    CHECK(list.size() == k * (k + 1) / 2 + 6);
    for (const auto& [label, expr] : list) CHECK_MESSAGE(is_external_symmetry(e, parse_generating_function(expr, 2)).tangent, label);
  }
  for (unsigned m : {2u, 3u}) {
    const auto f = fk(3, m);
    const auto list = fk_generating_functions(3, m);
    CHECK(list.size() == 10);
    for (const auto& [label, expr] : list) CHECK_MESSAGE(is_external_symmetry(f, parse_generating_function(expr, 2)).tangent, label);
  }
}

TEST_CASE("non-symmetries are rejected with a witness") {
  const auto r = is_external_symmetry(ek(3), parse_generating_function("u10*u01", 2));
  CHECK_FALSE(r.tangent);
  CHECK_FALSE(r.witness.empty());
  CHECK_FALSE(is_external_symmetry(ek(3), parse_generating_function("y*u10", 2)).tangent);
}

TEST_CASE("cartan lift annihilator") {
  const auto e = ek(3);
  const auto forms = cartan_lift_annihilator(e, 1);
  CHECK(forms.size() == 1);
  const auto C = cartan_on_equation(e);
  for (const auto& X : C.generators()) CHECK(forms[0](X).is_zero());
  const auto k3 = kernel_distribution(e.vars(), cartan_lift_annihilator(e, 3));
  CHECK(spans_equal(k3, C));
}

TEST_CASE("monge chart of Y_3") {
  const auto y = monge_y(3);
  CHECK(y.vars()->size() == 1 + 3 + 2 + 1 + 1);
  const auto D = y.total_derivative();
  CHECK(D.component("w0") == RationalFunction::variable(y.vars(), "w0_1"));
  CHECK(D.component("w0_2") == RationalFunction::variable(y.vars(), "lam"));
  CHECK(D.component("w2") == RationalFunction::variable(y.vars(), "lam").pow(3) / RationalFunction(y.vars(), 3));
  CHECK(weak_flag(y.distribution()).ranks().back() == y.vars()->size());
}

TEST_CASE("catalog lookup") {
  CHECK_THROWS_WITH_AS(make_model("unknown-name", {}), doctest::Contains("unknown catalog model"), Error);
  for (const auto& entry : catalog_entries()) {
    const auto m = make_model(entry.name, {});
    CHECK((m.pde.has_value() || m.distribution.has_value()));
  }
  CHECK_THROWS_AS(make_model("rkm", {.k = 3, .m = 3, .mlist = {}}), Error);
}
