// One pass/fail line per acceptance criterion; exit status 1 when any line fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "jetsym/analysis.hpp"

using namespace jetsym;

namespace {

using Sizes = std::vector<std::size_t>;

std::string vec(const Sizes& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

// Collects sub-checks of one criterion and the text explaining them.
struct Line {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "FAILED ") + what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::map<std::string, std::string> monge_to_ek(unsigned k) {
  std::map<std::string, std::string> out;
  for (const auto& [from, to] : ek_to_monge_names(k)) out[to] = from;
  return out;
}

std::vector<std::pair<std::string, VectorField>> point_fields(unsigned k) {
  const auto y = monge_y(k);
  std::vector<std::pair<std::string, VectorField>> out;
  for (const auto& pf : ek_point_fields(k)) out.emplace_back(pf.name, point_prolongation(pf, y));
  return out;
}

QVector combination(const CommutatorTable& t, const std::vector<std::pair<std::string, Rational>>& value) {
  QVector out(t.names.size());
  for (const auto& [name, c] : value)
    for (std::size_t i = 0; i < t.names.size(); ++i)
      if (t.names[i] == name) out[i] += c;
  return out;
}

// ---------------------------------------------------------------------------

void c1(Line& l) {
  for (int k = 3; k <= 6; ++k) {
    const auto t = tanaka_prolong(build_nk(k), 1);
    const std::size_t g0 = t.layer_dim(0), g1 = t.layer_dim(1);
    const std::size_t want1 = k == 3 ? 2 : 0;
    l.check(g0 == 4 && g1 == want1, "k=" + std::to_string(k) + ": g0 " + std::to_string(g0) + ", g1 " + std::to_string(g1));
  }
}

void c2(Line& l) {
  for (int k = 4; k <= 6; ++k) {
    const auto r = verify_appendix_formula(k);
    std::string c;
    for (const auto& s : r.constraints) c += (c.empty() ? "" : ", ") + s;
    l.check(r.ok(), "k=" + std::to_string(k) + ": constraints {" + c + "}, h-action " +
                        (r.g0_formula_ok && r.g1_formula_ok ? "matches" : "differs"));
  }
}

void c3(Line& l) {
  const auto mixed = strong_flag(reduce_equation(e2e3_generic()).reduced.dist).growth;
  l.check(mixed == Sizes{2, 1, 1, 2, 1}, "E2+E3 strong " + vec(mixed) + " (want (2,1,1,2,1))");
  for (const auto& e : {three_e3_generic(), ek(3)}) {
    const auto g = strong_flag(reduce_equation(e).reduced.dist).growth;
    l.check(g == Sizes{2, 1, 2, 3}, e.name() + " strong " + vec(g));
  }
  const auto gp = weak_flag(reduce_equation(goursat_pair()).reduced.dist).growth;
  l.check(gp == Sizes{2, 1, 1, 1}, "Goursat pair weak " + vec(gp));
}

void c4(Line& l) {
  for (unsigned k : {3u, 4u}) {
    const std::string K = "k=" + std::to_string(k) + ": ";
    const auto e = ek(k);
    const auto gfs = ek_generating_functions(k);
    bool all = true;
    for (const auto& [label, f] : gfs) all = all && is_external_symmetry(e, parse_generating_function(f, 2)).tangent;
    l.check(all, K + "(a) generating functions external");

    const auto red = reduce_equation(e).reduced;
    const auto fields = point_fields(k);
    bool sym = true;
    for (const auto& [name, X] : fields)
      sym = sym && verify_symmetry_of_distribution(red.dist, rename_chart(X, red.chart, monge_to_ek(k))).pass;
    l.check(sym, K + "(b) point fields are symmetries");

    const std::size_t want = k * (k + 1) / 2 + 6;
    l.check(gfs.size() == want && fields.size() == want, K + "(c) count " + std::to_string(gfs.size()));

    const auto tb = tanaka_upper_bound(red.dist);
    l.check(tb.bounded && tb.value == want, K + "(d) Tanaka " + std::to_string(tb.value));

    const auto t = commutator_table(fields);
    bool rel = t.independent && t.closed;
    for (const auto& r : ek_relations(k)) rel = rel && t.bracket(r.a, r.b) == combination(t, r.value);
    rel = rel && t.bracket("X", "L") == combination(t, {{w_label(k - 1, 0), Rational(1)}});
    rel = rel && t.bracket("R", "T") == combination(t, {{"S1", Rational(1)}, {"S2", Rational(-1)}});
    rel = rel && t.bracket("L", "T") == combination(t, {{"X", Rational(1)}});
    const bool gr = grading_check(t, ek_weights(k)).pass && grading_check(t, ek_bigrading(k)).pass;
    l.check(rel && gr, K + "(e) relations and both gradings");
  }
}

void c5(Line& l) {
  const auto f = fk(3, 2);
  const auto gfs = fk_generating_functions(3, 2);
  std::size_t ok = 0;
  for (const auto& [label, expr] : gfs) ok += is_external_symmetry(f, parse_generating_function(expr, 2)).tangent;
  l.check(ok == gfs.size() && gfs.size() == 10, std::to_string(ok) + " of " + std::to_string(gfs.size()) + " pass");
}

void c6(Line& l) {
  for (unsigned k : {3u, 4u}) {
    const auto red = reduce_equation(ek(k)).reduced;
    const auto sym = symbol_algebra(red.dist, std::uint64_t{0});
    Sizes dims = {2, 1};
    for (unsigned d = 2; d <= k; ++d) dims.push_back(d);
    const auto& b = red.dist.basis();
    const auto v = verify_nk(sym.algebra, symbol_class(sym, b[0]), symbol_class(sym, b[1]));
    l.check(v.pass && v.depth == static_cast<int>(k + 1) && sym.algebra.negative_layer_dims() == dims,
            "k=" + std::to_string(k) + ": layers " + vec(sym.algebra.negative_layer_dims()) + ", n_" +
                std::to_string(v.depth));
  }
}

void c7(Line& l) {
  const auto c = cone_reduction(rkm(3, 2));
  const auto& v = c.cartan.vars();
  const bool etas = c.eta.size() == 2 &&
                    c.eta[0] == VectorField::parse(v, {{"u20", "1"}, {"u11", "lam"}, {"u02", "lam^2"}}) &&
                    c.eta[1] == VectorField::parse(v, {{"u11", "1"}, {"u02", "2*lam"}});
  l.check(etas && c.closure_is_cartan_plus_eta, "closure adds exactly eta1, eta2");
  l.check(c.xi_spans_cauchy, "xi Cauchy for the quotient distribution");
  l.check(c.plus_is_weak_derived && c.plus_is_strong_derived,
          "rank " + std::to_string(c.plus.dist.rank()) + " quotient vs 2nd derived, derived ranks " +
              vec(c.delta_weak_ranks));
  l.note(std::string("quotient = Delta + <eta1, eta2>: ") + (c.plus_is_delta_with_eta ? "yes" : "no"));
  const auto one = cone_reduction(rkm(3, 1));
  l.note(std::string("m=1: xi Cauchy ") + (one.xi_spans_cauchy ? "yes" : "no") + ", 1st derived " +
         (one.plus_is_weak_derived && one.plus_is_strong_derived ? "yes" : "no"));
}

void c8(Line& l) {
  const auto rep = lbt_report(s8_2e2e1(), {{"u_z", "u001"}, {"x u_z", "x*u001"}, {"z u_z", "z*u001"}});
  bool ext = true;
  for (const auto& en : rep.entries) ext = ext && en.external;
  l.check(ext && rep.source_rank == 3 && rep.kernel_witnesses.size() >= 3,
          "2E2+E1 kernel " + std::to_string(rep.kernel_dim()) + " from " + std::to_string(rep.source_rank) +
              " independent symmetries");
  const auto nine = reduce_equation(s8_9e3()).reduced.dist;
  const auto ranks = weak_flag(nine).ranks();
  l.check(ranks.back() < nine.dim(),
          "9E3 weak flag stops at " + std::to_string(ranks.back()) + " < " + std::to_string(nine.dim()));
}

void c9(Line& l) {
  const auto tb = tanaka_upper_bound(monge_kl({0, 1, 2}).distribution());
  l.check(tb.bounded && tb.value == 11, "Tanaka " + std::to_string(tb.value) + " (2n+5 = 11)");
}

void c10(Line& l) {
  const auto hc = hilbert_cartan();
  const auto ranks = weak_flag(hc).ranks();
  const auto tb = tanaka_upper_bound(hc);
  l.check(ranks == Sizes{2, 3, 5}, "weak ranks " + vec(ranks));
  l.check(tb.bounded && tb.value == 14, "Tanaka " + std::to_string(tb.value));
}

Polynomial random_poly(std::mt19937_64& rng, const VarList& vars) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 3), nterms(0, 5), ex(0, 2);
  std::vector<Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(vars->size(), 0);
    for (auto& e : m) e = static_cast<Exponent>(ex(rng));
    terms.push_back({m, rat(coeff(rng), den(rng))});
  }
  return Polynomial(vars, std::move(terms));
}

void c11(Line& l) {
  // Jacobi and antisymmetry on every table and symbol computed here.
  bool jac = true;
  for (unsigned k : {3u, 4u}) jac = jac && !jacobi_check(commutator_table(point_fields(k)).as_algebra());
  for (const auto& d : {reduce_equation(ek(3)).reduced.dist, hilbert_cartan(), monge_kl({0, 1, 2}).distribution()})
    jac = jac && !jacobi_check(symbol_algebra(d, std::uint64_t{0}).algebra);
  for (int k = 2; k <= 6; ++k) jac = jac && !jacobi_check(build_nk(k));
  l.check(jac, "Jacobi on tables and symbols");

  std::mt19937_64 rng(2024);
  const auto v = make_varlist({"a", "b", "c"});
  bool ring = true;
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly(rng, v), q = random_poly(rng, v), r = random_poly(rng, v);
    ring = ring && (p + q) * r == p * r + q * r && p * q == q * p && (p * q) * r == p * (q * r);
    for (std::size_t i = 0; i < 3; ++i)
      ring = ring && (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i);
  }
  l.check(ring, "ring axioms and Leibniz, 200 cases");

  const auto hc = hilbert_cartan();
  const auto back = deprolong(prolong_rank2(hc).dist);
  bool trip = back.possible && same_vars(back.result.chart, hc.vars());
  if (trip) {
    std::vector<VectorField> g;
    for (const auto& b : back.result.dist.basis()) g.emplace_back(hc.vars(), b.components());
    trip = spans_equal(Distribution(hc.vars(), g), hc);
  }
  l.check(trip, "prolong then deprolong");

  const auto c3v = make_varlist({"x", "u", "p"});
  const Distribution contact(c3v, {VectorField::parse(c3v, {{"x", "1"}, {"u", "p"}}), VectorField::coordinate(c3v, "p")});
  Sizes dims;
  bool mono = true;
  std::vector<VectorField> prev;
  for (int deg = 0; deg <= 2; ++deg) {
    const auto res = solve_polynomial_symmetries(contact, deg);
    std::vector<VectorField> both = res.basis;
    both.insert(both.end(), prev.begin(), prev.end());
    mono = mono && rank_over_q(both) == res.dimension();
    dims.push_back(res.dimension());
    prev = res.basis;
  }
  l.check(mono, "solver monotone, dims " + vec(dims));

  const auto rep = lbt_report(ek(3), ek_generating_functions(3));
  const auto& pr = rep.reduction;
  std::mt19937_64 pick_rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, rep.entries.size() - 1);
  bool compat = true;
  for (int t = 0; t < 5; ++t) {
    const auto& a = rep.entries[pick(pick_rng)];
    const auto& b = rep.entries[pick(pick_rng)];
    compat = compat && push_to_slice(lie_bracket(a.restricted, b.restricted), pr.pi, pr.slice, pr.reduced.chart) ==
                           lie_bracket(a.pushed, b.pushed);
  }
  l.check(compat, "pushforward respects brackets on 5 pairs");
}

void c12(Line& l) {
  const auto red = reduce_equation(ek(3)).reduced;
  SolverOptions o;
  o.weights = ek_reduction_weights(3);
  try {
    const auto res = solve_polynomial_symmetries(red.dist, 0, o);
    l.check(res.dimension() == 12, "dimension " + std::to_string(res.dimension()) + " from " +
                                       std::to_string(res.unknowns) + " unknowns");
  } catch (const BudgetExceeded& e) {
    l.note(e.what());
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Line&)>>> criteria = {
      {"Tanaka layers of n_k, k = 3..6", c1},
      {"derivation formulas on n_k", c2},
      {"growth vectors of the worked examples", c3},
      {"E_k symmetry algebra, k = 3, 4", c4},
      {"F_3 with m = 2", c5},
      {"symbols of E_k are n_{k+1}", c6},
      {"R_3^2 reduction chain", c7},
      {"failure witnesses in three variables", c8},
      {"(kl) bound, m = (0,1,2)", c9},
      {"Hilbert-Cartan", c10},
      {"property suites", c11},
      {"weighted solver on E_3", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(l);
    } catch (const std::exception& e) {
      l.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream notes;
    for (std::size_t j = 0; j < l.notes.size(); ++j) notes << (j ? "; " : "") << l.notes[j];
    std::cout << (l.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << notes.str() << "] (" << std::fixed << std::setprecision(1) << secs << "s)\n";
    failed += !l.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
