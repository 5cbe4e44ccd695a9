#include "jetsym/geometry.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "jetsym/expression.hpp"

namespace jetsym {

namespace {

std::size_t var_index(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw Error("unknown coordinate '" + name + "'");
  return static_cast<std::size_t>(it - vars->begin());
}

void require_same(const VarList& a, const VarList& b) {
  if (!same_vars(a, b)) throw ChartMismatch("vector fields live on different charts");
}

}  // namespace

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(VarList vars) : vars_(std::move(vars)), comp_(vars_->size(), RationalFunction(vars_)) {}

VectorField::VectorField(VarList vars, std::vector<RationalFunction> comp)
    : vars_(std::move(vars)), comp_(std::move(comp)) {
  if (comp_.size() != vars_->size()) throw Error("vector field has wrong number of components");
}

VectorField VectorField::coordinate(const VarList& vars, const std::string& name) {
  VectorField v(vars);
  v.comp_[var_index(vars, name)] = RationalFunction(vars, 1);
  return v;
}

VectorField VectorField::parse(const VarList& vars, const std::vector<std::pair<std::string, std::string>>& comps) {
  VectorField v(vars);
  for (const auto& [name, expr] : comps) v.comp_[var_index(vars, name)] += parse_expression(expr, vars);
  return v;
}

const RationalFunction& VectorField::component(const std::string& name) const {
  return comp_[var_index(vars_, name)];
}

bool VectorField::is_zero() const {
  return std::all_of(comp_.begin(), comp_.end(), [](const RationalFunction& c) { return c.is_zero(); });
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  RationalFunction out(vars_);
  if (f.is_constant()) return out;
  for (std::size_t i = 0; i < comp_.size(); ++i) {
    if (comp_[i].is_zero()) continue;
    if (!f.num().depends_on(i) && !f.den().depends_on(i)) continue;
    out += comp_[i] * f.derivative(i);
  }
  return out;
}

QVector VectorField::evaluate(const PointAssignment& p) const {
  QVector out(comp_.size());
  for (std::size_t i = 0; i < comp_.size(); ++i)
    if (!comp_[i].is_zero()) out[i] = comp_[i].evaluate(p);
  return out;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comp_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same(vars_, o.vars_);
  for (std::size_t i = 0; i < comp_.size(); ++i)
    if (!o.comp_[i].is_zero()) comp_[i] += o.comp_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same(vars_, o.vars_);
  for (std::size_t i = 0; i < comp_.size(); ++i)
    if (!o.comp_[i].is_zero()) comp_[i] -= o.comp_[i];
  return *this;
}

VectorField& VectorField::operator*=(const RationalFunction& f) {
  for (auto& c : comp_)
    if (!c.is_zero()) c *= f;
  return *this;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return same_vars(a.vars_, b.vars_) && a.comp_ == b.comp_;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < comp_.size(); ++i) {
    const auto& c = comp_[i];
    if (c.is_zero()) continue;
    const std::string d = "∂_" + (*vars_)[i];
    std::string term;
    if (c.is_one()) {
      term = d;
    } else if (c.is_constant() && c.constant_value() == -1) {
      term = "-" + d;
    } else {
      std::string s = c.to_string();
      const bool wrap = s.find_first_of("+-", 1) != std::string::npos || s.find('/') != std::string::npos;
      term = (wrap ? "(" + s + ")" : s) + "*" + d;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
  require_same(v.vars(), w.vars());
  VectorField out(v.vars());
  for (std::size_t i = 0; i < v.size(); ++i) {
    RationalFunction c = v.apply(w[i]);
    c -= w.apply(v[i]);
    out[i] = std::move(c);
  }
  return out;
}

RationalFunction OneForm::operator()(const VectorField& v) const {
  RationalFunction s(vars);
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!comp[i].is_zero() && !v[i].is_zero()) s += comp[i] * v[i];
  return s;
}

std::string OneForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i].is_zero()) continue;
    std::string s = comp[i].to_string();
    std::string term = comp[i].is_one() ? "d" + (*vars)[i] : "(" + s + ")*d" + (*vars)[i];
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(VarList vars, std::vector<VectorField> generators)
    : vars_(std::move(vars)), generators_(std::move(generators)) {
  RfEchelon e(vars_, vars_->size());
  for (const auto& g : generators_) {
    require_same(vars_, g.vars());
    e.insert(g.components());
  }
  for (const auto& row : e.rows()) basis_.emplace_back(vars_, row);
  pivots_ = e.pivots();
}

VectorField Distribution::residual(const VectorField& v) const {
  require_same(vars_, v.vars());
  VectorField r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (r[pc].is_zero()) continue;
    const RationalFunction f = r[pc];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == pc) {
        r[c] = RationalFunction(vars_);
      } else if (!basis_[k][c].is_zero()) {
        r[c] -= f * basis_[k][c];
      }
    }
  }
  return r;
}

Distribution::Distribution(const RfEchelon& e) : vars_(e.vars()), pivots_(e.pivots()) {
  for (const auto& row : e.rows()) basis_.emplace_back(vars_, row);
  generators_ = basis_;
}

bool Distribution::contains(const VectorField& v) const { return residual(v).is_zero(); }

std::optional<std::vector<RationalFunction>> Distribution::coordinates(const VectorField& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<RationalFunction> c;
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<OneForm> Distribution::annihilator() const {
  std::vector<bool> is_pivot(dim(), false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<OneForm> out;
  for (std::size_t f = 0; f < dim(); ++f) {
    if (is_pivot[f]) continue;
    OneForm th{vars_, std::vector<RationalFunction>(dim(), RationalFunction(vars_))};
    th.comp[f] = RationalFunction(vars_, 1);
    for (std::size_t k = 0; k < basis_.size(); ++k) th.comp[pivots_[k]] = -basis_[k][f];
    out.push_back(std::move(th));
  }
  return out;
}

Distribution Distribution::operator+(const Distribution& o) const {
  require_same(vars_, o.vars_);
  std::vector<VectorField> g = basis_;
  g.insert(g.end(), o.basis_.begin(), o.basis_.end());
  return Distribution(vars_, std::move(g));
}

std::size_t generic_rank(const Distribution& d) { return d.rank(); }

std::vector<OneForm> annihilator(const Distribution& d) { return d.annihilator(); }

bool spans_equal(const Distribution& a, const Distribution& b) {
  if (!same_vars(a.vars(), b.vars())) return false;
  if (a.rank() != b.rank()) return false;
  return std::all_of(a.basis().begin(), a.basis().end(), [&](const VectorField& v) { return b.contains(v); }) &&
         std::all_of(b.basis().begin(), b.basis().end(), [&](const VectorField& v) { return a.contains(v); });
}

bool is_involutive(const Distribution& d) {
  const auto& b = d.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!d.contains(lie_bracket(b[i], b[j]))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Flags

std::vector<std::size_t> Flag::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& s : steps) r.push_back(s.rank());
  return r;
}

namespace {

// Adds the candidates that are new modulo cur; returns the reduced new fields.
std::vector<VectorField> extend(Distribution& cur, const std::vector<VectorField>& candidates) {
  RfEchelon e(cur.vars(), cur.dim());
  for (const auto& b : cur.basis()) e.insert(b.components());
  std::vector<VectorField> fresh;
  for (const auto& c : candidates) {
    RfVector r = e.reduce(c.components());
    if (is_zero(r)) continue;
    fresh.emplace_back(cur.vars(), r);
    e.insert(std::move(r));
  }
  if (!fresh.empty()) cur = Distribution(e);
  return fresh;
}

}  // namespace

Flag weak_flag(const Distribution& d, int max_steps) {
  Flag f;
  Distribution cur(d.vars(), d.basis());
  f.steps.push_back(cur);
  f.growth.push_back(cur.rank());
  std::vector<VectorField> fresh = cur.basis();
  const std::vector<VectorField> base = cur.basis();
  while (static_cast<int>(f.steps.size()) < max_steps) {
    std::vector<VectorField> cand;
    for (const auto& g : base)
      for (const auto& x : fresh) cand.push_back(lie_bracket(g, x));
    const std::size_t before = cur.rank();
    fresh = extend(cur, cand);
    if (fresh.empty()) {
      f.stabilized = true;
      break;
    }
    f.steps.push_back(cur);
    f.growth.push_back(cur.rank() - before);
  }
  if (!f.stabilized && cur.rank() == cur.dim()) f.stabilized = true;
  return f;
}

Flag strong_flag(const Distribution& d, int max_steps) {
  Flag f;
  Distribution cur(d.vars(), d.basis());
  f.steps.push_back(cur);
  f.growth.push_back(cur.rank());
  std::vector<VectorField> all = cur.basis();
  std::vector<VectorField> fresh = all;
  bool first = true;
  while (static_cast<int>(f.steps.size()) < max_steps) {
    std::vector<VectorField> cand;
    if (first) {
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) cand.push_back(lie_bracket(all[i], all[j]));
    } else {
      for (const auto& x : fresh)
        for (const auto& y : all) cand.push_back(lie_bracket(x, y));
    }
    first = false;
    const std::size_t before = cur.rank();
    fresh = extend(cur, cand);
    if (fresh.empty()) {
      f.stabilized = true;
      break;
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
    f.steps.push_back(cur);
    f.growth.push_back(cur.rank() - before);
  }
  if (!f.stabilized && cur.rank() == cur.dim()) f.stabilized = true;
  return f;
}

Distribution derived(const Distribution& d) {
  Distribution cur(d.vars(), d.basis());
  const auto& b = d.basis();
  std::vector<VectorField> cand;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) cand.push_back(lie_bracket(b[i], b[j]));
  extend(cur, cand);
  return cur;
}

Distribution cauchy_characteristics(const Distribution& d) {
  const auto& b = d.basis();
  const std::size_t r = b.size();
  if (r == d.dim()) return d;
  // theta([sum c_j v_j, v_k]) = sum c_j theta([v_j, v_k]) because the
  // derivative terms land in d; residual coordinates play the role of theta
  std::vector<std::vector<VectorField>> res(r, std::vector<VectorField>(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = j + 1; k < r; ++k) {
      res[j][k] = d.residual(lie_bracket(b[j], b[k]));
      res[k][j] = -res[j][k];
    }
  RfEchelon e(d.vars(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t f = 0; f < d.dim(); ++f) {
      RfVector row(r, RationalFunction(d.vars()));
      bool any = false;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == k) continue;
        row[j] = res[j][k][f];
        any = any || !row[j].is_zero();
      }
      if (any) e.insert(std::move(row));
    }
  std::vector<VectorField> gens;
  for (const auto& c : e.kernel()) {
    VectorField x(d.vars());
    for (std::size_t j = 0; j < r; ++j)
      if (!c[j].is_zero()) x += c[j] * b[j];
    gens.push_back(std::move(x));
  }
  return Distribution(d.vars(), std::move(gens));
}

Distribution ad_closure(const Distribution& d, const Distribution& p, int max_steps) {
  Distribution cur(d.vars(), d.basis());
  std::vector<VectorField> fresh = cur.basis();
  std::vector<std::size_t> ranks = {cur.rank()};
  for (int step = 0; step < max_steps; ++step) {
    std::vector<VectorField> cand;
    for (const auto& g : p.basis())
      for (const auto& x : fresh) cand.push_back(lie_bracket(g, x));
    fresh = extend(cur, cand);
    if (fresh.empty()) return cur;
    ranks.push_back(cur.rank());
  }
  std::string msg = "ad-closure did not stabilize; ranks";
  for (auto r : ranks) msg += " " + std::to_string(r);
  throw BudgetExceeded(msg);
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

struct SliceMap {
  std::vector<std::size_t> tidx;
  VarList chart;
  std::vector<RationalFunction> images;  // source var -> slice expression
  std::vector<long> keep;                // source index -> slice index or -1
};

SliceMap make_slice(const VarList& vars, const Transversal& transversal) {
  SliceMap s;
  std::set<std::size_t> seen;
  for (const auto& [name, val] : transversal) {
    const std::size_t i = var_index(vars, name);
    if (!seen.insert(i).second) throw Error("coordinate repeated in slice: " + name);
    s.tidx.push_back(i);
  }
  std::vector<std::string> names;
  s.keep.assign(vars->size(), -1);
  for (std::size_t i = 0; i < vars->size(); ++i)
    if (!seen.count(i)) {
      s.keep[i] = static_cast<long>(names.size());
      names.push_back((*vars)[i]);
    }
  s.chart = make_varlist(names);
  for (std::size_t i = 0; i < vars->size(); ++i) {
    if (s.keep[i] >= 0) {
      s.images.push_back(RationalFunction::variable(s.chart, (*vars)[i]));
    } else {
      const auto it = std::find_if(transversal.begin(), transversal.end(),
                                   [&](const auto& tv) { return tv.first == (*vars)[i]; });
      s.images.emplace_back(s.chart, it->second);
    }
  }
  return s;
}

// x minus the pi combination matching x on the transversal coordinates.
VectorField straighten(const VectorField& x, const Distribution& pi, const std::vector<std::size_t>& tidx) {
  const std::size_t r = pi.rank();
  std::vector<RfVector> a(r, RfVector(r));
  RfVector rhs(r);
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t k = 0; k < r; ++k) a[b][k] = pi.basis()[k][tidx[b]];
    rhs[b] = x[tidx[b]];
  }
  if (is_zero(rhs)) return x;
  auto c = solve(a, rhs, pi.vars());
  if (!c) throw Error("slice is not transversal to the characteristic directions");
  VectorField out = x;
  for (std::size_t k = 0; k < r; ++k)
    if (!(*c)[k].is_zero()) out -= (*c)[k] * pi.basis()[k];
  return out;
}

VectorField restrict_to_slice(const VectorField& x, const SliceMap& s, const std::vector<std::size_t>& tidx) {
  for (auto t : tidx)
    if (!x[t].is_zero()) throw Error("field still moves the slice coordinate " + (*x.vars())[t]);
  VectorField out(s.chart);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (s.keep[i] < 0 || x[i].is_zero()) continue;
    try {
      out[static_cast<std::size_t>(s.keep[i])] = x[i].compose(s.images, s.chart);
    } catch (const DivisionByZero&) {
      throw Error("slice meets a pole of the component along " + (*x.vars())[i]);
    }
  }
  return out;
}

void check_transversal(const Distribution& pi, const SliceMap& s) {
  const std::size_t r = pi.rank();
  if (s.tidx.size() != r)
    throw Error("slice fixes " + std::to_string(s.tidx.size()) + " coordinates but the characteristic rank is " +
                std::to_string(r));
  // columns of the pi matrix on the transversal, restricted to the slice
  RfEchelon cols(s.chart, r);
  for (auto t : s.tidx) {
    RfVector col(r);
    for (std::size_t k = 0; k < r; ++k) {
      try {
        col[k] = pi.basis()[k][t].compose(s.images, s.chart);
      } catch (const DivisionByZero&) {
        throw Error("non-transversal slice at coordinate " + (*pi.vars())[t]);
      }
    }
    if (!cols.insert(col)) throw Error("non-transversal slice at coordinate " + (*pi.vars())[t]);
  }
}

}  // namespace

Reduction reduce_along(const Distribution& d, const Distribution& pi, const Transversal& transversal) {
  require_same(d.vars(), pi.vars());
  const SliceMap s = make_slice(d.vars(), transversal);
  check_transversal(pi, s);
  std::vector<VectorField> gens;
  for (const auto& v : d.basis()) {
    VectorField r = restrict_to_slice(straighten(v, pi, s.tidx), s, s.tidx);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  Reduction out{s.chart, Distribution(s.chart, std::move(gens))};
  if (out.dist.rank() + pi.rank() != d.rank())
    throw GenericityError("reduction has rank " + std::to_string(out.dist.rank()) + ", expected " +
                          std::to_string(d.rank() - pi.rank()));
  return out;
}

VectorField push_to_slice(const VectorField& x, const Distribution& pi, const Transversal& transversal,
                          const VarList& slice_chart) {
  const SliceMap s = make_slice(x.vars(), transversal);
  if (!same_vars(s.chart, slice_chart)) throw ChartMismatch("slice chart does not match the transversal");
  VectorField r = restrict_to_slice(straighten(x, pi, s.tidx), s, s.tidx);
  return VectorField(slice_chart, r.components());
}

VectorField rename_chart(const VectorField& v, const VarList& target,
                         const std::map<std::string, std::string>& rename) {
  std::vector<RationalFunction> images;
  std::vector<std::size_t> place;
  for (const auto& name : *v.vars()) {
    auto it = rename.find(name);
    const std::string& n = it == rename.end() ? name : it->second;
    const std::size_t idx = var_index(target, n);
    images.push_back(RationalFunction::variable(target, n));
    place.push_back(idx);
  }
  VectorField out(target);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[place[i]] = v[i].compose(images, target);
  return out;
}

Distribution rename_chart(const Distribution& d, const VarList& target,
                          const std::map<std::string, std::string>& rename) {
  std::vector<VectorField> g;
  for (const auto& b : d.basis()) g.push_back(rename_chart(b, target, rename));
  return Distribution(target, std::move(g));
}

Reduction prolong_rank2(const Distribution& d, const std::string& fiber) {
  if (d.rank() != 2) throw Error("prolongation needs a rank 2 distribution, got rank " + std::to_string(d.rank()));
  std::vector<std::string> names = *d.vars();
  std::string t = fiber;
  for (int i = 1; std::find(names.begin(), names.end(), t) != names.end(); ++i) t = fiber + std::to_string(i);
  names.push_back(t);
  auto vars = make_varlist(names);
  auto lift = [&](const VectorField& v) {
    std::vector<RationalFunction> c;
    for (const auto& x : v.components()) c.push_back(x.rebase(vars));
    c.emplace_back(vars);
    return VectorField(vars, std::move(c));
  };
  const auto& g = d.generators().size() == 2 ? d.generators() : d.basis();
  VectorField v1 = lift(g[0]) + RationalFunction::variable(vars, t) * lift(g[1]);
  return {vars, Distribution(vars, {v1, VectorField::coordinate(vars, t)})};
}

Deprolongation deprolong(const Distribution& d) {
  if (d.rank() != 2) throw Error("de-prolongation needs a rank 2 distribution");
  Deprolongation out;
  const Distribution sq = derived(d);
  const Distribution ch = cauchy_characteristics(sq);
  out.cauchy_rank = ch.rank();
  if (ch.rank() != 1) return out;
  const VectorField& xi = ch.basis()[0];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!xi[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_pair(!xi[a].is_constant(), xi[a].complexity()) <
           std::make_pair(!xi[b].is_constant(), xi[b].complexity());
  });
  for (auto c : order)
    for (long val : {0L, 1L, 2L, -1L, 3L, 5L}) {
      Transversal tr = {{(*d.vars())[c], Rational(val)}};
      try {
        out.result = reduce_along(sq, ch, tr);
      } catch (const Error&) {
        continue;
      }
      out.possible = true;
      out.slice = tr;
      return out;
    }
  throw GenericityError("no admissible slice found for the Cauchy line");
}

// ---------------------------------------------------------------------------
// Symbol algebra

PointAssignment random_point(const VarList& vars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 18), den(1, 3);
  PointAssignment p;
  for (std::size_t i = 0; i < vars->size(); ++i) {
    int a = num(rng);
    a = a <= 9 ? a - 10 : a - 9;  // {-9..-1} U {1..9}
    p.push_back(rat(a, den(rng)));
  }
  return p;
}

SymbolAlgebra symbol_algebra(const Distribution& d, const PointAssignment& p, int max_depth) {
  if (p.size() != d.dim()) throw Error("point has wrong number of coordinates");
  SymbolAlgebra out;
  out.point = p;
  const Flag wf = weak_flag(d, max_depth);
  out.generic_growth = wf.growth;

  auto eval = [&](const VectorField& v) {
    try {
      return v.evaluate(p);
    } catch (const DivisionByZero&) {
      throw GenericityError("a field has a pole at the chosen point; re-randomize");
    }
  };

  QEchelon span(d.dim());
  std::vector<std::vector<VectorField>> layers;
  std::vector<QVector> values;
  std::vector<int> degrees;
  for (std::size_t level = 0; level < wf.growth.size(); ++level) {
    std::vector<VectorField> cand;
    if (level == 0) {
      cand = d.basis();
    } else {
      for (const auto& g : layers[0])
        for (const auto& x : layers[level - 1]) cand.push_back(lie_bracket(g, x));
    }
    std::vector<VectorField> chosen;
    for (auto& c : cand) {
      QVector val = eval(c);
      if (!span.insert(to_sparse(val))) continue;
      chosen.push_back(std::move(c));
      values.push_back(std::move(val));
      degrees.push_back(-static_cast<int>(level + 1));
      if (chosen.size() == wf.growth[level]) break;
    }
    if (chosen.size() != wf.growth[level])
      throw GenericityError("pointwise growth differs from the generic growth at step " + std::to_string(level + 1) +
                            "; re-randomize the point");
    layers.push_back(std::move(chosen));
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < values.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  GradedLieAlgebra alg(labels, degrees);
  for (const auto& l : layers) out.representatives.insert(out.representatives.end(), l.begin(), l.end());

  const std::size_t n = values.size();
  std::vector<QVector> m(d.dim(), QVector(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < d.dim(); ++r) m[r][c] = values[c][r];
  const int depth = static_cast<int>(layers.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const int target = degrees[a] + degrees[b];
      QVector w = eval(lie_bracket(out.representatives[a], out.representatives[b]));
      auto c = solve(m, w);
      QVector val(n);
      if (!c) {
        if (-target <= depth) throw GenericityError("bracket escapes the flag at the chosen point");
        alg.set_bracket(a, b, val);
        continue;
      }
      for (std::size_t t = 0; t < n; ++t) {
        if (sgn((*c)[t]) == 0) continue;
        if (degrees[t] == target) {
          val[t] = (*c)[t];
        } else if (degrees[t] < target) {
          throw GenericityError("bracket of layers " + std::to_string(-degrees[a]) + " and " +
                                std::to_string(-degrees[b]) + " has a deeper component at the chosen point");
        }
      }
      alg.set_bracket(a, b, val);
    }
  out.algebra = std::move(alg);
  return out;
}

SymbolAlgebra symbol_algebra(const Distribution& d, std::uint64_t seed, int max_depth) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const PointAssignment p = random_point(d.vars(), rng);
    try {
      return symbol_algebra(d, p, max_depth);
    } catch (const GenericityError&) {
    }
  }
  throw GenericityError("no generic point found in 20 draws; try another seed");
}

}  // namespace jetsym
