#include "jetsym/analysis.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace jetsym {

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  const Polynomial g = gcd(a, b);
  return (a * *divide_exact(b, g)).monic();
}

Polynomial as_polynomial(const RationalFunction& f) {
  if (!f.is_polynomial()) throw Error("internal: expected a polynomial after clearing denominators");
  return f.num() * (Rational(1) / f.den().constant_value());
}

std::vector<VectorField> brackets(const Distribution& a, const Distribution& b) {
  std::vector<VectorField> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) out.push_back(lie_bracket(x, y));
  return out;
}

Distribution with(const Distribution& d, const std::vector<VectorField>& extra) {
  std::vector<VectorField> gens = d.basis();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Distribution(d.vars(), gens);
}

bool contains_all(const Distribution& big, const Distribution& small) {
  return std::all_of(small.basis().begin(), small.basis().end(), [&](const VectorField& v) { return big.contains(v); });
}

// Combinations sum c_j b_j of the basis of d killed by the given linear test.
Distribution sub_distribution(const Distribution& d, const std::function<RfVector(const VectorField&)>& test) {
  const auto& b = d.basis();
  if (b.empty()) return d;
  const std::size_t rows = test(b[0]).size();
  std::vector<RfVector> m(rows, RfVector(b.size()));
  for (std::size_t j = 0; j < b.size(); ++j) {
    const RfVector col = test(b[j]);
    for (std::size_t r = 0; r < rows; ++r) m[r][j] = col[r];
  }
  std::vector<VectorField> gens;
  for (const auto& c : kernel_basis(m, d.vars(), b.size())) {
    VectorField v(d.vars());
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!c[j].is_zero()) v += c[j] * b[j];
    gens.push_back(std::move(v));
  }
  return Distribution(d.vars(), gens);
}

std::string growth_string(const std::vector<std::size_t>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

PdeReduction reduce_equation(const EquationChart& e) {
  PdeReduction out;
  out.cartan = cartan_on_equation(e);
  out.pi = cauchy_characteristics(out.cartan);
  if (out.pi.rank() + 1 != e.n())
    throw GenericityError("Cauchy characteristics of the Cartan distribution have rank " +
                          std::to_string(out.pi.rank()) + ", expected " + std::to_string(e.n() - 1));
  std::string last;
  for (int value : {0, 1}) {
    Transversal slice;
    for (std::size_t i = 1; i < e.n(); ++i) slice.emplace_back(e.base()[i], Rational(value));
    try {
      out.reduced = reduce_along(out.cartan, out.pi, slice);
      out.slice = slice;
      return out;
    } catch (const Error& err) {
      last = err.what();
    }
  }
  throw GenericityError("no admissible slice: " + last);
}

NCheck check_N(const Distribution& d, int max_steps) {
  if (d.rank() != 2) throw Error("check_N needs a rank 2 distribution, got rank " + std::to_string(d.rank()));
  NCheck out;
  const Flag f = strong_flag(d, max_steps);
  if (!f.stabilized) throw Error("strong flag did not stabilize within " + std::to_string(max_steps) + " steps");
  out.strong_growth = f.growth;
  for (std::size_t i = 1; i < f.growth.size(); ++i)
    if (f.growth[i] > 1) {
      out.s = i + 1;
      break;
    }
  out.pass = out.s != 0;
  return out;
}

NondegeneracyReport nondegeneracy_suite(const EquationChart& e, int max_steps) {
  NondegeneracyReport rep;
  if (e.min_equation_order() <= 1) {
    rep.rejected = "the system contains equations of order " + std::to_string(e.min_equation_order());
    return rep;
  }
  PdeReduction red;
  try {
    red = reduce_equation(e);
  } catch (const Error& err) {
    rep.rejected = std::string("reduction: ") + err.what();
    return rep;
  }
  rep.n = check_N(red.reduced.dist, max_steps);
  if (!rep.n.pass) {
    rep.rejected = "the reduction is Goursat " + growth_string(rep.n.strong_growth);
    return rep;
  }
  rep.applicable = true;
  const std::size_t n = e.n(), s = rep.n.s;

  const Flag hf = strong_flag(red.cartan, max_steps);
  rep.cartan_strong_growth = hf.growth;
  auto hat = [&](std::size_t i) -> Distribution {
    if (i == 0) return red.pi;
    if (i - 1 < hf.steps.size()) return hf.steps[i - 1];
    return hf.steps.back();
  };
  const Distribution nabla = hat(s - 2);
  std::vector<std::size_t> base_idx;
  for (const auto& b : e.base())
    base_idx.push_back(static_cast<std::size_t>(std::find(e.vars()->begin(), e.vars()->end(), b) - e.vars()->begin()));
  const Distribution upsilon = sub_distribution(nabla, [&](const VectorField& v) {
    RfVector r;
    for (auto i : base_idx) r.push_back(v[i]);
    return r;
  });
  // The part of Ch(nabla_s) inside nabla_{s-3}.
  const Distribution ch = cauchy_characteristics(hat(s));
  const Distribution square = sub_distribution(hat(s - 3), [&](const VectorField& v) { return ch.residual(v).components(); });
  const Distribution up_pi = upsilon + red.pi;
  rep.rank_square = square.rank();
  rep.rank_upsilon = upsilon.rank();
  rep.rank_upsilon_pi = up_pi.rank();
  rep.rank_nabla = nabla.rank();
  const bool ranks_ok = rep.rank_square + 4 == n + s && rep.rank_upsilon_pi + 3 == n + s && rep.rank_nabla + 2 == n + s &&
                        rep.rank_upsilon + 2 == s;
  const bool nested = contains_all(up_pi, square) && contains_all(nabla, up_pi);
  rep.chain.pass = ranks_ok && nested;
  rep.chain.detail = "ranks " + std::to_string(rep.rank_square) + ", " + std::to_string(rep.rank_upsilon_pi) + ", " +
                     std::to_string(rep.rank_nabla) + " (expected " + std::to_string(n + s - 4) + ", " +
                     std::to_string(n + s - 3) + ", " + std::to_string(n + s - 2) + "), rank upsilon " +
                     std::to_string(rep.rank_upsilon) + (nested ? "" : ", inclusions fail");

  // (R) and its refinement along the filtration Pi = Pi_0 > Pi_1 > ...
  const Distribution rotated = with(up_pi, brackets(red.pi, upsilon));
  rep.r.pass = spans_equal(rotated, nabla);
  rep.r.detail = "rank of Pi + upsilon + [Pi, upsilon] is " + std::to_string(rotated.rank()) + " of " +
                 std::to_string(nabla.rank());
  rep.r_plus = rep.r;
  rep.pi_filtration = {red.pi.rank()};
  Distribution prev = red.pi;
  for (std::size_t i = 1; rep.r_plus.pass && i + 1 < n; ++i) {
    const Distribution target = prev + upsilon;
    const Distribution next = sub_distribution(prev, [&](const VectorField& p) {
      RfVector r;
      for (const auto& u : upsilon.basis()) {
        const VectorField res = target.residual(lie_bracket(p, u));
        r.insert(r.end(), res.components().begin(), res.components().end());
      }
      return r;
    });
    rep.pi_filtration.push_back(next.rank());
    const bool rank_ok = next.rank() + i + 1 == n;
    const bool rotates = spans_equal(with(next + upsilon, brackets(next, upsilon)), target);
    if (!rank_ok || !rotates) {
      rep.r_plus.pass = false;
      rep.r_plus.detail = "Pi_" + std::to_string(i) + " has rank " + std::to_string(next.rank()) +
                          (rotates ? "" : " and does not rotate onto Pi_" + std::to_string(i - 1) + " + upsilon");
    }
    prev = next;
  }
  if (rep.r_plus.pass) rep.r_plus.detail = "filtration ranks " + growth_string(rep.pi_filtration);

  // (G) or (G')
  const unsigned k = e.order();
  const Distribution closure = ad_closure(hat(s - 1), upsilon, max_steps);
  const long l = static_cast<long>(k) - static_cast<long>(s) + 2;
  rep.uses_g_prime = l < static_cast<long>(e.min_equation_order());
  if (rep.uses_g_prime) {
    if (l < 1) {
      rep.g.detail = "k - s + 2 < 1";
    } else {
      const Distribution target = kernel_distribution(e.vars(), cartan_lift_annihilator(e, static_cast<unsigned>(l)));
      rep.g.pass = spans_equal(closure, target);
      rep.g.detail = "closure rank " + std::to_string(closure.rank()) + " vs C_" + std::to_string(l) + " rank " +
                     std::to_string(target.rank());
    }
  } else {
    Distribution cur = closure;
    for (long i = 0; i < static_cast<long>(k) - static_cast<long>(s) + 1; ++i) cur = derived(cur);
    const Distribution target = kernel_distribution(e.vars(), cartan_lift_annihilator(e, 1));
    rep.g.pass = spans_equal(cur, target);
    rep.g.detail = "derived closure rank " + std::to_string(cur.rank()) + " vs C_1 rank " + std::to_string(target.rank());
  }
  return rep;
}

// ---------------------------------------------------------------------------

Verdict verify_symmetry_of_distribution(const Distribution& d, const VectorField& x) {
  if (!same_vars(d.vars(), x.vars())) throw ChartMismatch("field and distribution live on different charts");
  const auto forms = d.annihilator();
  for (std::size_t j = 0; j < d.basis().size(); ++j) {
    const VectorField b = lie_bracket(x, d.basis()[j]);
    for (std::size_t t = 0; t < forms.size(); ++t) {
      const RationalFunction r = forms[t](b);
      if (!r.is_zero())
        return {false, "theta_" + std::to_string(t) + "([X, v_" + std::to_string(j) + "]) = " + r.to_string()};
    }
  }
  return {true, ""};
}

VectorField point_prolongation(const PointField& x, const MongeChart& chart) {
  const auto& base = *chart.vars();
  unsigned max_order = 0;
  for (std::size_t j = 0; j < chart.size(); ++j) max_order = std::max(max_order, chart.dependent(j).order);
  const unsigned r = max_order + 1;
  std::vector<std::string> names = base;
  const std::string& lam = chart.parameter();
  for (unsigned t = 1; t <= r; ++t) names.push_back(lam + "_" + std::to_string(t));
  const VarList ext = make_varlist(names);

  auto lift = [&](const RationalFunction& f) { return f.rebase(ext); };
  auto var = [&](const std::string& name) { return RationalFunction::variable(ext, name); };

  VectorField D(ext);
  D[0] = RationalFunction(ext, 1);
  for (std::size_t j = 0; j < chart.size(); ++j) {
    const unsigned o = chart.dependent(j).order;
    for (unsigned i = 0; i < o; ++i) {
      const std::size_t slot = static_cast<std::size_t>(
          std::find(names.begin(), names.end(), chart.coordinate(j, i)) - names.begin());
      D[slot] = i + 1 < o ? var(chart.coordinate(j, i + 1)) : lift(chart.top(j));
    }
  }
  const std::size_t lam_slot = static_cast<std::size_t>(std::find(names.begin(), names.end(), lam) - names.begin());
  D[lam_slot] = var(lam + "_1");
  for (unsigned t = 1; t < r; ++t) D[base.size() + t - 1] = var(lam + "_" + std::to_string(t + 1));

  RationalFunction xi(ext);
  std::vector<RationalFunction> phi(chart.size(), RationalFunction(ext));
  for (const auto& [coord, expr] : x.components) {
    const RationalFunction v = lift(chart.parse(expr));
    if (coord == base[0]) {
      xi = v;
      continue;
    }
    bool found = false;
    for (std::size_t j = 0; j < chart.size() && !found; ++j)
      if (coord == chart.coordinate(j, 0)) {
        phi[j] = v;
        found = true;
      }
    if (!found) throw Error("point field " + x.name + " has a component on '" + coord + "', not a point coordinate");
  }

  VectorField out(ext);
  out[0] = xi;
  std::optional<RationalFunction> c_lam;
  for (std::size_t j = 0; j < chart.size(); ++j) {
    const unsigned o = chart.dependent(j).order;
    const RationalFunction w = var(chart.coordinate(j, 0));
    RationalFunction dw = D.apply(w);  // D^{i+1} w
    RationalFunction q = phi[j] - xi * dw;
    for (unsigned i = 0; i < o; ++i) {
      const std::size_t slot = static_cast<std::size_t>(
          std::find(names.begin(), names.end(), chart.coordinate(j, i)) - names.begin());
      out[slot] = q + xi * dw;
      q = D.apply(q);
      dw = D.apply(dw);
    }
    const RationalFunction dtop = lift(chart.top(j)).derivative(lam);
    if (dtop.is_zero()) throw Error("top derivative of " + chart.dependent(j).name + " does not depend on the parameter");
    const RationalFunction c = (q + xi * dw) / dtop;
    if (c_lam && !(*c_lam == c))
      throw Error("point field " + x.name + " does not prolong: dependents disagree on the parameter component");
    c_lam = c;
  }
  out[lam_slot] = c_lam ? *c_lam : RationalFunction(ext);

  VectorField res(chart.vars());
  try {
    for (std::size_t i = 0; i < base.size(); ++i) res[i] = out[i].rebase(chart.vars());
  } catch (const ChartMismatch&) {
    throw Error("point field " + x.name + " does not prolong: its lift involves derivatives of the parameter");
  }
  return res;
}

// ---------------------------------------------------------------------------

std::vector<QVector> flatten_fields(const std::vector<VectorField>& fields) {
  if (fields.empty()) return {};
  const VarList& vars = fields[0].vars();
  Polynomial den(vars, 1);
  for (const auto& f : fields) {
    if (!same_vars(f.vars(), vars)) throw ChartMismatch("fields live on different charts");
    for (const auto& c : f.components())
      if (!c.is_zero()) den = lcm(den, c.den().rebase(vars));
  }
  const RationalFunction L(den);
  std::map<std::pair<std::size_t, Monomial>, std::size_t> key;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse(fields.size());
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t i = 0; i < fields[a].size(); ++i) {
      if (fields[a][i].is_zero()) continue;
      const Polynomial p = as_polynomial(fields[a][i] * L);
      for (const auto& t : p.terms()) {
        auto [it, _] = key.emplace(std::make_pair(i, t.exponents), key.size());
        sparse[a].emplace_back(it->second, t.coeff);
      }
    }
  std::vector<QVector> out(fields.size(), QVector(key.size()));
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (const auto& [c, v] : sparse[a]) out[a][c] = v;
  return out;
}

std::size_t rank_over_q(const std::vector<VectorField>& fields) {
  const auto flat = flatten_fields(fields);
  return flat.empty() ? 0 : rank(flat, flat[0].size());
}

GradedLieAlgebra CommutatorTable::as_algebra() const {
  GradedLieAlgebra a(names, std::vector<int>(names.size(), 0));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) a.set_bracket(i, j, structure[i][j]);
  return a;
}

QVector CommutatorTable::bracket(const std::string& a, const std::string& b) const {
  const auto ia = std::find(names.begin(), names.end(), a), ib = std::find(names.begin(), names.end(), b);
  if (ia == names.end() || ib == names.end()) throw Error("unknown basis element in bracket");
  return structure[static_cast<std::size_t>(ia - names.begin())][static_cast<std::size_t>(ib - names.begin())];
}

CommutatorTable commutator_table(const std::vector<std::pair<std::string, VectorField>>& fields) {
  CommutatorTable t;
  const std::size_t n = fields.size();
  std::vector<VectorField> all;
  for (const auto& [name, f] : fields) {
    t.names.push_back(name);
    all.push_back(f);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      all.push_back(lie_bracket(fields[i].second, fields[j].second));
      pairs.emplace_back(i, j);
    }
  const auto flat = flatten_fields(all);
  const std::size_t rows = flat.empty() ? 0 : flat[0].size();
  std::vector<QVector> m(rows, QVector(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = flat[c][r];
  t.independent = rank(m, n) == n;
  t.structure.assign(n, std::vector<QVector>(n, QVector(n)));
  t.closed = true;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const auto c = solve(m, flat[n + p]);
    if (!c) {
      t.closed = false;
      t.escapes.push_back("[" + t.names[i] + ", " + t.names[j] + "]");
      continue;
    }
    t.structure[i][j] = *c;
    for (std::size_t a = 0; a < n; ++a) t.structure[j][i].at(a) = -(*c)[a];
  }
  return t;
}

namespace {

GradingCheck check_weights(const std::vector<std::string>& names,
                           const std::function<QVector(std::size_t, std::size_t)>& bracket, const Weights& w) {
  std::size_t len = 0;
  for (const auto& name : names) {
    const auto it = w.find(name);
    if (it == w.end()) return {false, "no weight for " + name};
    if (len == 0) len = it->second.size();
    if (it->second.size() != len) return {false, "weight of " + name + " has the wrong length"};
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const QVector v = bracket(i, j);
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (sgn(v[c]) == 0) continue;
        const auto &wi = w.at(names[i]), &wj = w.at(names[j]), &wc = w.at(names[c]);
        for (std::size_t a = 0; a < len; ++a)
          if (wi[a] + wj[a] != wc[a])
            return {false, "[" + names[i] + ", " + names[j] + "] has a " + names[c] + " component"};
      }
    }
  return {true, ""};
}

}  // namespace

GradingCheck grading_check(const CommutatorTable& table, const Weights& weights) {
  return check_weights(table.names, [&](std::size_t i, std::size_t j) { return table.structure[i][j]; }, weights);
}

GradingCheck grading_check(const GradedLieAlgebra& a, const Weights& weights) {
  return check_weights(a.labels(), [&](std::size_t i, std::size_t j) { return a.bracket(i, j); }, weights);
}

// ---------------------------------------------------------------------------

namespace {

// Monomials in nvars variables with weighted degree at most bound (weights >= 1).
void monomials_upto(const std::vector<int>& w, int bound, std::size_t i, Monomial& cur, std::vector<Monomial>& out) {
  if (i == w.size()) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e * w[i] <= bound; ++e) {
    cur[i] = static_cast<Exponent>(e);
    monomials_upto(w, bound - e * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

SolverResult solve_polynomial_symmetries(const Distribution& d, int degree, const SolverOptions& opts) {
  const VarList& vars = d.vars();
  const std::size_t N = vars->size();
  std::vector<int> w(N, 1);
  if (opts.weights) {
    for (std::size_t i = 0; i < N; ++i) {
      const auto it = opts.weights->find((*vars)[i]);
      if (it == opts.weights->end()) throw Error("no weight given for coordinate '" + (*vars)[i] + "'");
      if (it->second < 1) throw Error("coordinate weights must be positive");
      w[i] = it->second;
    }
  }
  // Unknowns: coefficient of monomial m in component i.
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  for (std::size_t i = 0; i < N; ++i) {
    const int bound = opts.weights ? degree + w[i] : degree;
    if (bound < 0) continue;
    std::vector<Monomial> ms;
    Monomial cur(N, 0);
    monomials_upto(opts.weights ? w : std::vector<int>(N, 1), bound, 0, cur, ms);
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); });
    for (auto& m : ms) unknowns.emplace_back(i, std::move(m));
  }
  SolverResult res;
  res.unknowns = unknowns.size();

  const auto forms = d.annihilator();
  QEchelon ech(unknowns.size());
  for (const auto& theta : forms)
    for (const auto& v : d.basis()) {
      std::vector<RationalFunction> A(N, RationalFunction(vars));
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (!theta.comp[j].is_zero() && !v[j].is_zero()) A[i] += theta.comp[j] * v[j].derivative(i);
      Polynomial den(vars, 1);
      for (const auto& a : A)
        if (!a.is_zero()) den = lcm(den, a.den());
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          if (!theta.comp[i].is_zero() && !v[j].is_zero()) den = lcm(den, (theta.comp[i] * v[j]).den());
      const RationalFunction L(den);
      std::vector<Polynomial> PA(N);
      std::vector<std::vector<Polynomial>> PB(N, std::vector<Polynomial>(N));
      for (std::size_t i = 0; i < N; ++i) {
        PA[i] = as_polynomial(A[i] * L);
        for (std::size_t j = 0; j < N; ++j) PB[i][j] = as_polynomial(theta.comp[i] * v[j] * L);
      }
      // theta([m d_i, v]) = m A_i - v(m) theta_i
      std::map<Monomial, std::map<std::size_t, Rational>> eqs;
      auto add = [&](std::size_t col, const Polynomial& p, const Monomial& shift, const Rational& c) {
        for (const auto& t : p.terms()) {
          Monomial e = t.exponents;
          for (std::size_t a = 0; a < N; ++a) e[a] = static_cast<Exponent>(e[a] + shift[a]);
          Rational& slot = eqs[e][col];
          slot += c * t.coeff;
        }
      };
      for (std::size_t col = 0; col < unknowns.size(); ++col) {
        const auto& [i, m] = unknowns[col];
        add(col, PA[i], m, Rational(1));
        for (std::size_t j = 0; j < N; ++j) {
          if (m[j] == 0 || PB[i][j].is_zero()) continue;
          Monomial dm = m;
          dm[j] = static_cast<Exponent>(dm[j] - 1);
          add(col, PB[i][j], dm, Rational(-static_cast<long>(m[j])));
        }
      }
      res.equations += eqs.size();
      if (res.equations * res.unknowns > opts.budget)
        throw BudgetExceeded("budget exceeded: " + std::to_string(res.equations) + " equations in " +
                             std::to_string(res.unknowns) + " unknowns");
      for (auto& [mono, row] : eqs) {
        SparseRow sr;
        for (auto& [c, val] : row)
          if (sgn(val) != 0) sr.emplace_back(c, val);
        if (!sr.empty()) ech.insert(std::move(sr));
      }
    }
  for (const auto& k : ech.kernel()) {
    VectorField f(vars);
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
      if (sgn(k[col]) == 0) continue;
      const auto& [i, m] = unknowns[col];
      f[i] += RationalFunction(Polynomial::monomial(vars, m, k[col]));
    }
    res.basis.push_back(std::move(f));
  }
  return res;
}

std::map<std::string, int> ek_reduction_weights(unsigned k) {
  std::map<std::string, int> w = {{"x", 1}, {"lam", 1}};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j) w[jet_name({i, j})] = static_cast<int>(k + 1 - i);
  return w;
}

std::map<std::string, int> monge_y_weights(unsigned k) {
  std::map<std::string, int> w = {{"x", 1}, {"lam", 1}};
  for (const auto& [from, to] : ek_to_monge_names(k)) w[to] = ek_reduction_weights(k).at(from);
  return w;
}

// ---------------------------------------------------------------------------

TanakaBound tanaka_upper_bound(const Distribution& d, std::uint64_t seed, int max_degree) {
  TanakaBound out;
  out.symbol = symbol_algebra(d, seed);
  out.tanaka = tanaka_prolong(out.symbol.algebra, max_degree);
  out.bounded = out.tanaka.proved_zero;
  out.value = out.tanaka.total_dim();
  return out;
}

QVector symbol_class(const SymbolAlgebra& s, const VectorField& v) {
  const auto layer = s.algebra.layer(-1);
  const QVector val = v.evaluate(s.point);
  std::vector<QVector> m(val.size(), QVector(layer.size()));
  for (std::size_t c = 0; c < layer.size(); ++c) {
    const QVector r = s.representatives[layer[c]].evaluate(s.point);
    for (std::size_t i = 0; i < val.size(); ++i) m[i][c] = r[i];
  }
  const auto c = solve(m, val);
  if (!c) throw Error("field is not in the distribution at the symbol point");
  QVector out(s.algebra.dim());
  for (std::size_t a = 0; a < layer.size(); ++a) out[layer[a]] = (*c)[a];
  return out;
}

// ---------------------------------------------------------------------------

ConeReduction cone_reduction(const EquationChart& e) {
  if (e.n() != 2 || e.parameters().empty() || e.parameters()[0] != "lam")
    throw Error("cone reduction needs two base variables and parameters lam, zeta1, ...");
  ConeReduction out;
  out.m = e.parameters().size() - 1;
  const auto& v = e.vars();
  const unsigned k = e.order();
  out.cartan = cartan_on_equation(e);
  std::vector<VectorField> zetas;
  Transversal at_zero;
  for (std::size_t j = 1; j <= out.m; ++j) {
    zetas.push_back(VectorField::coordinate(v, e.parameters()[j]));
    at_zero.emplace_back(e.parameters()[j], Rational(0));
  }
  const Distribution pi(v, zetas);
  out.closure = ad_closure(out.cartan, pi);

  const auto lam = RationalFunction::variable(v, "lam");
  VectorField eta(v);
  for (unsigned i = 0; i < k; ++i) eta += lam.pow(i) * VectorField::coordinate(v, jet_name({k - 1 - i, i}));
  for (std::size_t p = 0; p < out.m; ++p) {
    out.eta.push_back(eta);
    VectorField next(v);
    for (std::size_t c = 0; c < eta.size(); ++c) next[c] = eta[c].derivative("lam");
    eta = next;
  }
  out.closure_is_cartan_plus_eta = spans_equal(out.closure, with(out.cartan, out.eta));

  out.tilde = reduce_along(out.closure, pi, at_zero);
  const auto& tv = out.tilde.chart;
  const VectorField dx = push_to_slice(total_derivative(e, 0), pi, at_zero, tv);
  const VectorField dy = push_to_slice(total_derivative(e, 1), pi, at_zero, tv);
  out.xi = dy - RationalFunction::variable(tv, "lam") * dx;
  const Distribution xi(tv, {out.xi});
  out.xi_spans_cauchy = spans_equal(cauchy_characteristics(out.tilde.dist), xi);

  const Transversal y0 = {{e.base()[1], Rational(0)}};
  out.plus = reduce_along(out.tilde.dist, xi, y0);
  const auto& pv = out.plus.chart;
  out.delta = Distribution(pv, {push_to_slice(dx, xi, y0, pv), VectorField::coordinate(pv, "lam")});
  const Flag wf = weak_flag(out.delta), sf = strong_flag(out.delta);
  out.delta_weak_ranks = wf.ranks();
  out.delta_strong_ranks = sf.ranks();
  out.plus_is_weak_derived = out.m < wf.steps.size() && spans_equal(out.plus.dist, wf.steps[out.m]);
  out.plus_is_strong_derived = out.m < sf.steps.size() && spans_equal(out.plus.dist, sf.steps[out.m]);
  std::vector<VectorField> etas;
  for (const auto& x : out.eta) etas.push_back(push_to_slice(push_to_slice(x, pi, at_zero, tv), xi, y0, pv));
  out.plus_is_delta_with_eta = spans_equal(out.plus.dist, with(out.delta, etas));
  return out;
}

// ---------------------------------------------------------------------------

LbtReport lbt_report(const EquationChart& e, const std::vector<NamedExpr>& generating_functions,
                     const std::vector<VectorField>* target_basis) {
  LbtReport rep;
  rep.reduction = reduce_equation(e);
  const auto& red = rep.reduction;
  std::vector<VectorField> restricted, pushed;
  for (const auto& [label, expr] : generating_functions) {
    LbtEntry entry;
    entry.label = label;
    const auto t = is_external_symmetry(e, parse_generating_function(expr, e.n()));
    entry.external = t.tangent;
    entry.witness = t.witness;
    if (t.tangent) {
      entry.restricted = t.field;
      entry.pushed = push_to_slice(t.field, red.pi, red.slice, red.reduced.chart);
      entry.pushed_zero = entry.pushed.is_zero();
      const Verdict v = verify_symmetry_of_distribution(red.reduced.dist, entry.pushed);
      if (!v.pass) throw Error("internal consistency: pushforward of " + label + " is not a symmetry: " + v.detail);
      entry.pushed_symmetry = true;
      if (entry.pushed_zero) rep.kernel_witnesses.push_back(label);
      restricted.push_back(entry.restricted);
      pushed.push_back(entry.pushed);
    }
    rep.entries.push_back(std::move(entry));
  }
  rep.source_rank = rank_over_q(restricted);
  rep.image_rank = rank_over_q(pushed);
  const Flag wf = weak_flag(red.reduced.dist);
  rep.reduced_weak_growth = wf.growth;
  rep.reduced_nonholonomic = wf.ranks().back() == red.reduced.dist.dim();
  if (target_basis) {
    std::vector<VectorField> both = pushed;
    both.insert(both.end(), target_basis->begin(), target_basis->end());
    const std::size_t rt = rank_over_q(*target_basis), rb = rank_over_q(both);
    rep.matches_target = rb == rep.image_rank && rb == rt;
  }
  return rep;
}

}  // namespace jetsym
