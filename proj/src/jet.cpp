#include "jetsym/jet.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace jetsym {

unsigned order(const MultiIndex& s) { return std::accumulate(s.begin(), s.end(), 0u); }

MultiIndex unit_index(std::size_t n, std::size_t i) {
  MultiIndex s(n, 0);
  s[i] = 1;
  return s;
}

MultiIndex plus_unit(MultiIndex s, std::size_t i) {
  ++s[i];
  return s;
}

namespace {

void gen_indices(std::size_t pos, unsigned left, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned a = left + 1; a-- > 0;) {
    cur[pos] = a;
    gen_indices(pos + 1, left - a, cur, out);
  }
}

bool dominates(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

std::size_t index_of(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw Error("unknown coordinate '" + name + "'");
  return static_cast<std::size_t>(it - vars->begin());
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, unsigned ord) {
  std::vector<MultiIndex> out;
  if (n == 0) return out;
  MultiIndex cur(n, 0);
  gen_indices(0, ord, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_upto(std::size_t n, unsigned max_order) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= max_order; ++k) {
    auto layer = multi_indices(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string jet_name(const MultiIndex& s) {
  if (order(s) == 0) return "u";
  const bool short_form = s.size() <= 3 && std::all_of(s.begin(), s.end(), [](unsigned e) { return e < 10; });
  std::string out = "u";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!short_form && i > 0) out += "_";
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<std::string> default_base(std::size_t n) {
  static const std::vector<std::string> xyz = {"x", "y", "z"};
  if (n <= 3) return {xyz.begin(), xyz.begin() + static_cast<long>(n)};
  std::vector<std::string> b;
  for (std::size_t i = 1; i <= n; ++i) b.push_back("x" + std::to_string(i));
  return b;
}

std::optional<MultiIndex> parse_jet_name(const std::string& name, const std::vector<std::string>& base) {
  const std::size_t n = base.size();
  if (name == "u") return MultiIndex(n, 0);
  if (n == 2) {
    static const std::vector<std::pair<std::vector<std::string>, MultiIndex>> aliases = {
        {{"p"}, {1, 0}},           {{"q"}, {0, 1}},           {{"r"}, {2, 0}},           {{"s"}, {1, 1}},
        {{"t"}, {0, 2}},           {{"alpha", "α"}, {3, 0}}, {{"beta", "β"}, {2, 1}},  {{"gamma", "γ"}, {1, 2}},
        {{"delta", "δ"}, {0, 3}}};
    for (const auto& [names, idx] : aliases)
      if (std::find(names.begin(), names.end(), name) != names.end()) return idx;
  }
  if (name.size() < 2 || name[0] != 'u') return std::nullopt;
  const std::string rest = name.substr(1);
  if (rest[0] == '_') {
    // u_xy: one letter per derivative
    MultiIndex s(n, 0);
    for (std::size_t c = 1; c < rest.size(); ++c) {
      auto it = std::find(base.begin(), base.end(), std::string(1, rest[c]));
      if (it == base.end()) return std::nullopt;
      ++s[static_cast<std::size_t>(it - base.begin())];
    }
    if (rest.size() > 1) return s;
    return std::nullopt;
  }
  if (rest.find('_') != std::string::npos) {
    MultiIndex s;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const std::size_t end = std::min(rest.find('_', start), rest.size());
      const std::string part = rest.substr(start, end - start);
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(c); }))
        return std::nullopt;
      s.push_back(static_cast<unsigned>(std::stoul(part)));
      start = end + 1;
    }
    if (s.size() == n) return s;
    return std::nullopt;
  }
  if (rest.size() == n && std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(c); })) {
    MultiIndex s;
    for (char c : rest) s.push_back(static_cast<unsigned>(c - '0'));
    return s;
  }
  return std::nullopt;
}

NameResolver jet_resolver(const std::vector<std::string>& base, VarList vars) {
  return [base, vars](const std::string& name) -> std::string {
    if (std::find(vars->begin(), vars->end(), name) != vars->end()) return name;
    if (name == "λ" || name == "lambda") return "lam";
    if (name.rfind("ζ", 0) == 0) return "zeta" + name.substr(std::string("ζ").size());
    if (auto s = parse_jet_name(name, base)) return jet_name(*s);
    return name;
  };
}

VarList jet_chart(const std::vector<std::string>& base, unsigned k) {
  std::vector<std::string> names = base;
  for (const auto& s : multi_indices_upto(base.size(), k)) names.push_back(jet_name(s));
  return make_varlist(std::move(names));
}

// ---------------------------------------------------------------------------
// EquationChart

EquationChart::EquationChart(std::string name, std::vector<std::string> base, std::vector<std::string> parameters,
                             unsigned order_k, const std::vector<std::pair<MultiIndex, std::string>>& top,
                             const std::vector<std::pair<MultiIndex, std::string>>& lower)
    : name_(std::move(name)), base_(std::move(base)), params_(std::move(parameters)), order_(order_k) {
  const std::size_t nb = base_.size();
  if (nb == 0) throw Error("equation needs at least one base variable");
  if (order_ == 0) throw Error("equation order must be positive");
  std::map<MultiIndex, std::string> explicit_expr;
  min_order_ = order_;
  for (const auto& [s, e] : top) {
    if (s.size() != nb || jetsym::order(s) != order_)
      throw Error("top equation " + jet_name(s) + " is not of order " + std::to_string(order_));
    if (!explicit_expr.emplace(s, e).second) throw Error("jet " + jet_name(s) + " given twice");
  }
  for (const auto& [s, e] : lower) {
    if (s.size() != nb || jetsym::order(s) >= order_)
      throw Error("lower equation " + jet_name(s) + " must have order below " + std::to_string(order_));
    if (!explicit_expr.emplace(s, e).second) throw Error("jet " + jet_name(s) + " given twice");
    min_order_ = std::min(min_order_, jetsym::order(s));
  }

  const auto all = multi_indices_upto(nb, order_);
  std::vector<std::string> names = base_;
  for (const auto& s : all) {
    if (jetsym::order(s) == order_) continue;
    const bool principal = std::any_of(lower.begin(), lower.end(), [&](const auto& l) { return dominates(s, l.first); });
    if (!principal) {
      free_.push_back(s);
      names.push_back(jet_name(s));
    }
  }
  for (const auto& p : params_) names.push_back(p);
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw Error("duplicate coordinate name on the equation chart");
  }
  vars_ = make_varlist(std::move(names));

  for (const auto& s : free_) value_.emplace(s, RationalFunction::variable(vars_, jet_name(s)));
  for (const auto& [s, e] : explicit_expr) value_.emplace(s, parse(e));

  // Jets fixed by differentiating a parameter-free lower equation.
  std::vector<std::size_t> param_idx;
  for (const auto& p : params_) param_idx.push_back(index_of(vars_, p));
  auto param_free = [&](const RationalFunction& f) {
    return std::none_of(param_idx.begin(), param_idx.end(),
                        [&](std::size_t i) { return f.num().depends_on(i) || f.den().depends_on(i); });
  };
  auto total_d = [&](const RationalFunction& f, std::size_t i) -> std::optional<RationalFunction> {
    RationalFunction out(vars_);
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      if (!f.num().depends_on(v) && !f.den().depends_on(v)) continue;
      RationalFunction dv(vars_);
      if (v < nb) {
        if (v != i) continue;
        dv = RationalFunction(vars_, 1);
      } else {
        auto jet = parse_jet_name((*vars_)[v], base_);
        if (!jet) return std::nullopt;
        auto it = value_.find(plus_unit(*jet, i));
        if (it == value_.end()) return std::nullopt;
        dv = it->second;
      }
      out += f.derivative(v) * dv;
    }
    return out;
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& s : all) {
      if (value_.count(s)) continue;
      for (std::size_t i = 0; i < nb; ++i) {
        if (s[i] == 0) continue;
        MultiIndex prev = s;
        --prev[i];
        auto it = value_.find(prev);
        if (it == value_.end() || is_free(prev) || !param_free(it->second)) continue;
        if (auto d = total_d(it->second, i)) {
          value_.emplace(s, *d);
          progress = true;
          break;
        }
      }
    }
  }
  for (const auto& s : all)
    if (!value_.count(s)) throw Error("jet " + jet_name(s) + " is not determined by the equations");
}

bool EquationChart::is_free(const MultiIndex& s) const {
  return std::find(free_.begin(), free_.end(), s) != free_.end();
}

const RationalFunction& EquationChart::value(const MultiIndex& s) const {
  auto it = value_.find(s);
  if (it == value_.end()) throw Error("jet " + jet_name(s) + " is outside the equation chart");
  return it->second;
}

std::vector<std::pair<MultiIndex, RationalFunction>> EquationChart::principal() const {
  std::vector<std::pair<MultiIndex, RationalFunction>> out;
  for (const auto& s : multi_indices_upto(n(), order_))
    if (!is_free(s)) out.emplace_back(s, value(s));
  return out;
}

RationalFunction EquationChart::parse(const std::string& expr) const {
  return parse_expression(expr, vars_, jet_resolver(base_, vars_));
}

VectorField total_derivative(const EquationChart& e, std::size_t i) {
  VectorField d(e.vars());
  d[i] = RationalFunction(e.vars(), 1);
  for (const auto& s : e.free_jets()) d[index_of(e.vars(), jet_name(s))] = e.value(plus_unit(s, i));
  return d;
}

Distribution cartan_on_equation(const EquationChart& e) {
  std::vector<VectorField> g;
  for (std::size_t i = 0; i < e.n(); ++i) g.push_back(total_derivative(e, i));
  for (const auto& p : e.parameters()) g.push_back(VectorField::coordinate(e.vars(), p));
  return Distribution(e.vars(), std::move(g));
}

std::vector<OneForm> cartan_lift_annihilator(const EquationChart& e, unsigned l) {
  if (l == 0 || l > e.order()) throw Error("contact level must lie in 1.." + std::to_string(e.order()));
  const auto& vars = e.vars();
  std::vector<OneForm> out;
  for (const auto& s : multi_indices_upto(e.n(), l - 1)) {
    OneForm th{vars, std::vector<RationalFunction>(vars->size(), RationalFunction(vars))};
    const RationalFunction& us = e.value(s);
    for (std::size_t v = 0; v < vars->size(); ++v)
      if (us.num().depends_on(v) || us.den().depends_on(v)) th.comp[v] = us.derivative(v);
    for (std::size_t i = 0; i < e.n(); ++i) th.comp[i] -= e.value(plus_unit(s, i));
    if (std::all_of(th.comp.begin(), th.comp.end(), [](const RationalFunction& c) { return c.is_zero(); })) continue;
    out.push_back(std::move(th));
  }
  return out;
}

Distribution kernel_distribution(const VarList& vars, const std::vector<OneForm>& forms) {
  std::vector<RfVector> m;
  for (const auto& f : forms) m.push_back(f.comp);
  std::vector<VectorField> g;
  for (auto& k : kernel_basis(m, vars, vars->size())) g.emplace_back(vars, std::move(k));
  return Distribution(vars, std::move(g));
}

// ---------------------------------------------------------------------------
// Contact fields

namespace {

struct JetSpace {
  std::vector<std::string> base;
  unsigned k;
  VarList vars;
  std::map<MultiIndex, std::size_t> idx;

  JetSpace(std::vector<std::string> b, unsigned order) : base(std::move(b)), k(order), vars(jet_chart(base, order)) {
    std::size_t i = base.size();
    for (const auto& s : multi_indices_upto(base.size(), k)) idx[s] = i++;
  }

  VectorField total(std::size_t i) const {
    VectorField d(vars);
    d[i] = RationalFunction(vars, 1);
    for (const auto& [s, at] : idx)
      if (order(s) < k) d[at] = RationalFunction::variable(vars, (*vars)[idx.at(plus_unit(s, i))]);
    return d;
  }
};

}  // namespace

VectorField jet_total_derivative(const std::vector<std::string>& base, unsigned k, std::size_t i) {
  return JetSpace(base, k).total(i);
}

RationalFunction parse_generating_function(const std::string& text, std::size_t n) {
  const auto base = default_base(n);
  const VarList v = jet_chart(base, 1);
  return parse_expression(text, v, jet_resolver(base, v));
}

VectorField contact_field(const RationalFunction& f, std::size_t n) { return prolong_contact_field(f, n, 1); }

VectorField prolong_contact_field(const RationalFunction& f, std::size_t n, unsigned k) {
  if (k == 0) throw Error("prolongation order must be positive");
  const auto base = default_base(n);
  const JetSpace big(base, k + 1);
  const JetSpace small(base, k);
  const RationalFunction F = f.rebase(big.vars);
  std::vector<VectorField> D;
  for (std::size_t i = 0; i < n; ++i) D.push_back(big.total(i));

  std::vector<RationalFunction> fu(n);
  for (std::size_t i = 0; i < n; ++i) fu[i] = F.derivative(big.idx.at(unit_index(n, i)));

  std::map<MultiIndex, RationalFunction> Ds;
  Ds[MultiIndex(n, 0)] = F;
  for (const auto& s : multi_indices_upto(n, k)) {
    if (order(s) == 0) continue;
    const std::size_t i = static_cast<std::size_t>(std::find_if(s.begin(), s.end(), [](unsigned e) { return e > 0; }) -
                                                   s.begin());
    MultiIndex prev = s;
    --prev[i];
    Ds[s] = D[i].apply(Ds.at(prev));
  }

  VectorField out(small.vars);
  auto shrink = [&](const RationalFunction& c, const std::string& slot) {
    try {
      return c.rebase(small.vars);
    } catch (const ChartMismatch&) {
      throw Error("prolongation did not cancel the order " + std::to_string(k + 1) + " terms along " + slot);
    }
  };
  for (std::size_t i = 0; i < n; ++i) out[i] = shrink(-fu[i], base[i]);
  for (const auto& [s, at] : small.idx) {
    RationalFunction c = Ds.at(s);
    for (std::size_t i = 0; i < n; ++i)
      if (!fu[i].is_zero()) c -= fu[i] * RationalFunction::variable(big.vars, (*big.vars)[big.idx.at(plus_unit(s, i))]);
    out[at] = shrink(c, jet_name(s));
  }
  return out;
}

RationalFunction generating_function(const VectorField& x, std::size_t n) {
  const VarList& v = x.vars();
  RationalFunction f = x.component("u");
  for (std::size_t i = 0; i < n; ++i)
    f -= RationalFunction::variable(v, jet_name(unit_index(n, i))) * x[i];
  return f;
}

TangencyCheck is_external_symmetry(const EquationChart& e, const RationalFunction& f) {
  const std::size_t n = e.n();
  const VarList& iv = e.vars();
  VectorField xhat = prolong_contact_field(f, n, e.order());
  if (e.base() != default_base(n)) {
    std::map<std::string, std::string> rn;
    const auto db = default_base(n);
    for (std::size_t i = 0; i < n; ++i) rn[db[i]] = e.base()[i];
    std::vector<std::string> names = e.base();
    for (const auto& s : multi_indices_upto(n, e.order())) names.push_back(jet_name(s));
    xhat = rename_chart(xhat, make_varlist(names), rn);
  }
  const VarList& av = xhat.vars();

  std::vector<RationalFunction> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(RationalFunction::variable(iv, e.base()[i]));
  const auto jets = multi_indices_upto(n, e.order());
  for (const auto& s : jets) images.push_back(e.value(s));

  std::vector<RationalFunction> pulled(av->size());
  for (std::size_t c = 0; c < av->size(); ++c) pulled[c] = xhat[c].compose(images, iv);

  TangencyCheck out;
  VectorField y(iv);
  for (std::size_t i = 0; i < n; ++i) y[i] = pulled[i];
  for (const auto& s : e.free_jets()) y[index_of(iv, jet_name(s))] = pulled[n + static_cast<std::size_t>(
                                                                                std::find(jets.begin(), jets.end(), s) -
                                                                                jets.begin())];

  std::vector<std::size_t> pidx;
  for (const auto& p : e.parameters()) pidx.push_back(index_of(iv, p));
  std::vector<RfVector> rows;
  RfVector rhs;
  std::vector<MultiIndex> labels;
  for (std::size_t j = 0; j < jets.size(); ++j) {
    const auto& s = jets[j];
    if (e.is_free(s)) continue;
    const RationalFunction& val = e.value(s);
    RationalFunction r = pulled[n + j] - y.apply(val);
    RfVector row;
    for (auto p : pidx) row.push_back(val.derivative(p));
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
    labels.push_back(s);
  }
  std::optional<RfVector> c;
  if (pidx.empty()) {
    if (std::all_of(rhs.begin(), rhs.end(), [](const RationalFunction& r) { return r.is_zero(); })) c = RfVector{};
  } else {
    c = solve(rows, rhs, iv);
  }
  if (!c) {
    std::size_t bad = 0;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (!rhs[j].is_zero() &&
          std::all_of(rows[j].begin(), rows[j].end(), [](const RationalFunction& x) { return x.is_zero(); })) {
        bad = j;
        break;
      } else if (!rhs[j].is_zero() && bad == 0) {
        bad = j;
      }
    out.witness = "prolonged field leaves the equation; residual along " + jet_name(labels[bad]) + ": " +
                  rhs[bad].to_string();
    return out;
  }
  for (std::size_t a = 0; a < pidx.size(); ++a) y[pidx[a]] = (*c)[a];
  out.tangent = true;
  out.field = std::move(y);
  return out;
}

// ---------------------------------------------------------------------------
// MongeChart

MongeChart::MongeChart(std::string name, std::vector<Dependent> dependents, std::string parameter)
    : name_(std::move(name)), deps_(std::move(dependents)), param_(std::move(parameter)) {
  if (deps_.empty()) throw Error("Monge system needs a dependent variable");
  std::vector<std::string> names = {"x"};
  for (std::size_t j = 0; j < deps_.size(); ++j) {
    if (deps_[j].order == 0) throw Error("dependent " + deps_[j].name + " has order 0");
    for (unsigned i = 0; i < deps_[j].order; ++i) names.push_back(coordinate(j, i));
  }
  names.push_back(param_);
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size()) throw Error("duplicate coordinate name on the Monge chart");
  vars_ = make_varlist(std::move(names));
  for (const auto& d : deps_) top_.push_back(parse(d.top));
}

std::string MongeChart::coordinate(std::size_t j, unsigned i) const {
  return i == 0 ? deps_[j].name : deps_[j].name + "_" + std::to_string(i);
}

RationalFunction MongeChart::parse(const std::string& expr) const {
  const VarList v = vars_;
  const std::string p = param_;
  return parse_expression(expr, vars_, [v, p](const std::string& s) {
    if ((s == "λ" || s == "lambda") && std::find(v->begin(), v->end(), s) == v->end()) return p;
    return s;
  });
}

VectorField MongeChart::total_derivative() const {
  VectorField d(vars_);
  d[0] = RationalFunction(vars_, 1);
  for (std::size_t j = 0; j < deps_.size(); ++j) {
    const unsigned o = deps_[j].order;
    for (unsigned i = 0; i + 1 < o; ++i)
      d[index_of(vars_, coordinate(j, i))] = RationalFunction::variable(vars_, coordinate(j, i + 1));
    d[index_of(vars_, coordinate(j, o - 1))] = top_[j];
  }
  return d;
}

Distribution MongeChart::distribution() const {
  return Distribution(vars_, {total_derivative(), VectorField::coordinate(vars_, param_)});
}

}  // namespace jetsym
