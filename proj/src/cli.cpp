#include "jetsym/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "jetsym/expression.hpp"
#include "jetsym/io.hpp"

namespace jetsym {

namespace {

struct Options {
  std::string model;
  std::string file;
  std::optional<unsigned> k;
  std::optional<unsigned> m;
  std::vector<unsigned> mlist;
  bool json = false;
  std::uint64_t seed = 0;
  int max_steps = 12;
  int degree = 0;
  std::string weights;
  bool strong = false;
  bool cartan = false;
  std::string builtin;
  int max_degree = 8;
  std::string generating_functions;
  std::string fields;
  std::size_t budget = 200'000'000;
  std::string report;
};

// Result of one subcommand: machine-readable body plus text lines.
struct Report {
  Json result = Json::object();
  std::vector<std::string> text;
  bool pass = true;
  void line(std::string s) { text.push_back(std::move(s)); }
};

struct Source {
  std::string name;
  std::optional<EquationChart> pde;
  std::optional<MongeChart> monge;
  std::optional<Distribution> dist;
  std::optional<PointAssignment> point;
  std::optional<unsigned> ek_order;  // set for the E_k family
};

std::string growth_text(const std::vector<std::size_t>& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

Source load_source(const Options& o) {
  if (o.model.empty() == o.file.empty()) throw Error("give exactly one model source: --model NAME or --file PATH");
  Source s;
  if (!o.model.empty()) {
    CatalogParams p{o.k, o.m, o.mlist.empty() ? std::nullopt : std::optional(o.mlist)};
    Model m = make_model(o.model, p);
    s.name = m.name;
    s.pde = m.pde;
    s.monge = m.monge;
    s.dist = m.distribution;
    if (o.model == "ek" || o.model == "monge-y") s.ek_order = o.k.value_or(3);
    return s;
  }
  const Json j = read_json_file(o.file);
  s.name = o.file;
  if (j.contains("top")) {
    s.pde = equation_from_json(j);
  } else {
    auto d = distribution_from_json(j);
    s.dist = d.dist;
    s.point = d.point;
  }
  return s;
}

// The rank 2 picture: the reduction of a PDE, the Monge distribution, or the file distribution.
Distribution working_distribution(const Source& s, bool cartan) {
  if (s.pde) return cartan ? cartan_on_equation(*s.pde) : reduce_equation(*s.pde).reduced.dist;
  if (s.monge) return s.monge->distribution();
  return *s.dist;
}

const EquationChart& require_pde(const Source& s, const std::string& cmd) {
  if (!s.pde) throw Error(cmd + " needs a PDE model");
  return *s.pde;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string combination_text(const std::vector<std::string>& names, const QVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const bool neg = sgn(v[i]) < 0;
    const Rational a = neg ? Rational(-v[i]) : v[i];
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != 1) s += rational_text(a) + " ";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

Json algebra_brackets_text(const GradedLieAlgebra& a, Report& r) {
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = x + 1; y < a.dim(); ++y) {
      const QVector& v = a.bracket(x, y);
      if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; })) continue;
      r.line("  [" + a.label(x) + ", " + a.label(y) + "] = " + combination_text(a.labels(), v));
    }
  return to_json(a);
}

std::vector<std::pair<std::string, VectorField>> ek_fields(unsigned k) {
  const auto y = monge_y(k);
  std::vector<std::pair<std::string, VectorField>> out;
  for (const auto& pf : ek_point_fields(k)) out.emplace_back(pf.name, point_prolongation(pf, y));
  return out;
}

// Named fields for commutators and grading: a self-contained file or the E_k basis.
std::vector<std::pair<std::string, VectorField>> table_fields(const Options& o) {
  if (!o.fields.empty()) return fields_from_json(read_json_file(o.fields));
  const Source s = load_source(o);
  if (!s.ek_order) throw Error("give --fields FILE, or --model ek / monge-y for the built-in basis");
  return ek_fields(*s.ek_order);
}

// ---------------------------------------------------------------------------

Report cmd_flags(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const Distribution d = working_distribution(s, o.cartan);
  r.result["chart_dim"] = d.dim();
  r.result["rank"] = d.rank();
  if (!o.strong) {
    const Flag w = weak_flag(d, o.max_steps);
    r.result["weak"] = {{"growth", w.growth}, {"ranks", w.ranks()}, {"stabilized", w.stabilized}};
    r.line("weak growth: " + growth_text(w.growth));
  }
  const Flag st = strong_flag(d, o.max_steps);
  r.result["strong"] = {{"growth", st.growth}, {"ranks", st.ranks()}, {"stabilized", st.stabilized}};
  r.line("strong growth: " + growth_text(st.growth));
  return r;
}

Report cmd_cauchy(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const Distribution d = s.pde ? cartan_on_equation(*s.pde) : working_distribution(s, false);
  const Distribution ch = cauchy_characteristics(d);
  r.result["rank"] = ch.rank();
  r.result["cauchy"] = to_json(ch);
  r.line("Cauchy characteristics: rank " + std::to_string(ch.rank()));
  for (const auto& b : ch.basis()) r.line("  " + b.to_string());
  return r;
}

Report cmd_reduce(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const auto red = reduce_equation(require_pde(s, "reduce"));
  const Flag w = weak_flag(red.reduced.dist, o.max_steps), st = strong_flag(red.reduced.dist, o.max_steps);
  Json slice = Json::object();
  std::string slice_text;
  for (const auto& [name, value] : red.slice) {
    slice[name] = to_json(value);
    slice_text += (slice_text.empty() ? "" : ", ") + name + " = " + rational_text(value);
  }
  r.result["pi"] = to_json(red.pi);
  r.result["slice"] = slice;
  r.result["reduced"] = to_json(red.reduced.dist);
  r.result["weak_growth"] = w.growth;
  r.result["strong_growth"] = st.growth;
  r.line("Pi: rank " + std::to_string(red.pi.rank()));
  r.line("slice: " + slice_text);
  r.line("reduced chart: " + std::to_string(red.reduced.dist.dim()) + " coordinates");
  for (const auto& b : red.reduced.dist.basis()) r.line("  " + b.to_string());
  r.line("weak growth: " + growth_text(w.growth));
  r.line("strong growth: " + growth_text(st.growth));
  return r;
}

Report cmd_symbol(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const Distribution d = working_distribution(s, o.cartan);
  const SymbolAlgebra sym = s.point ? symbol_algebra(d, *s.point, o.max_steps) : symbol_algebra(d, o.seed, o.max_steps);
  r.result["layer_dims"] = sym.algebra.negative_layer_dims();
  r.result["point"] = to_json(sym.point);
  r.line("symbol layer dims: " + growth_text(sym.algebra.negative_layer_dims()));
  r.line("brackets:");
  r.result["algebra"] = algebra_brackets_text(sym.algebra, r);
  const auto j = jacobi_check(sym.algebra);
  r.result["jacobi"] = !j.has_value();
  if (j) {
    r.pass = false;
    r.line("Jacobi fails: " + j->reason);
  }
  return r;
}

Report cmd_tanaka(const Options& o) {
  Report r;
  GradedLieAlgebra m;
  if (!o.builtin.empty()) {
    if (o.builtin != "nk") throw Error("unknown builtin '" + o.builtin + "' (expected nk)");
    if (!o.k) throw Error("--builtin nk needs --k");
    m = build_nk(static_cast<int>(*o.k));
  } else if (!o.file.empty() && read_json_file(o.file).contains("layers")) {
    m = lie_algebra_from_json(read_json_file(o.file));
  } else {
    const Source s = load_source(o);
    const Distribution d = working_distribution(s, o.cartan);
    m = (s.point ? symbol_algebra(d, *s.point) : symbol_algebra(d, o.seed)).algebra;
  }
  const TanakaResult t = tanaka_prolong(m, o.max_degree);
  r.result["negative_dims"] = m.negative_layer_dims();
  Json layers = Json::array();
  std::string text;
  for (const auto& l : t.layers) {
    layers.push_back(l.dim());
    text += (text.empty() ? "" : ", ") + ("g" + std::to_string(l.degree)) + ": " + std::to_string(l.dim());
  }
  r.result["layers"] = layers;
  r.result["bounded"] = t.proved_zero;
  r.result["total_dim"] = t.total_dim();
  r.line("negative part: " + growth_text(m.negative_layer_dims()));
  r.line(text);
  r.line("total: " + std::to_string(t.total_dim()) + (t.proved_zero ? "" : " (cutoff reached)"));
  return r;
}

Report cmd_check_symmetry(const Options& o) {
  Report r;
  const Source s = load_source(o);
  Json entries = Json::array();
  auto record = [&](const std::string& name, bool pass, const std::string& witness) {
    entries.push_back({{"name", name}, {"pass", pass}, {"witness", witness}});
    r.line((pass ? "PASS " : "FAIL ") + name + (pass ? "" : ": " + witness));
    r.pass = r.pass && pass;
  };
  if (!o.generating_functions.empty()) {
    const auto& e = require_pde(s, "check-symmetry --generating-functions");
    for (const auto& [name, f] : generating_functions_from_json(read_json_file(o.generating_functions))) {
      const auto t = is_external_symmetry(e, parse_generating_function(f, e.n()));
      record(name, t.tangent, t.witness);
    }
  } else if (!o.fields.empty()) {
    const Distribution d = working_distribution(s, o.cartan);
    for (const auto& [name, X] : fields_from_json(read_json_file(o.fields), d.vars())) {
      const Verdict v = verify_symmetry_of_distribution(d, X);
      record(name, v.pass, v.detail);
    }
  } else {
    throw Error("check-symmetry needs --generating-functions FILE or --fields FILE");
  }
  r.result["entries"] = entries;
  return r;
}

Report cmd_commutators(const Options& o) {
  Report r;
  const auto fields = table_fields(o);
  const CommutatorTable t = commutator_table(fields);
  r.result["names"] = t.names;
  r.result["independent"] = t.independent;
  r.result["closed"] = t.closed;
  r.result["escapes"] = t.escapes;
  r.line("basis: " + std::to_string(t.names.size()) + (t.independent ? " independent fields" : " fields, dependent"));
  if (!t.independent || !t.closed) {
    r.pass = false;
    for (const auto& e : t.escapes) r.line("escapes: " + e);
    return r;
  }
  const GradedLieAlgebra a = t.as_algebra();
  r.result["structure"] = algebra_brackets_text(a, r)["brackets"];
  const auto j = jacobi_check(a);
  r.result["jacobi"] = !j.has_value();
  if (j) {
    r.pass = false;
    r.line("Jacobi fails: " + j->reason);
  }
  return r;
}

Report cmd_grading(const Options& o) {
  Report r;
  const auto fields = table_fields(o);
  const CommutatorTable t = commutator_table(fields);
  if (!t.closed) throw Error("the fields do not close under brackets");
  std::vector<std::pair<std::string, Weights>> checks;
  if (!o.weights.empty()) {
    checks.emplace_back("weights", weights_from_json(read_json_file(o.weights)));
  } else {
    const Source s = load_source(o);
    if (!s.ek_order) throw Error("grading needs --weights FILE outside the E_k family");
    checks.emplace_back("grading", ek_weights(*s.ek_order));
    checks.emplace_back("bi-grading", ek_bigrading(*s.ek_order));
  }
  for (const auto& [label, w] : checks) {
    const GradingCheck g = grading_check(t, w);
    r.result[label] = {{"pass", g.pass}, {"witness", g.witness}};
    r.line(label + ": " + (g.pass ? "pass" : "fail at " + g.witness));
    r.pass = r.pass && g.pass;
  }
  return r;
}

Json verdict_json(const Verdict& v) { return {{"pass", v.pass}, {"detail", v.detail}}; }

Report cmd_nondeg(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const auto rep = nondegeneracy_suite(require_pde(s, "nondeg"), o.max_steps);
  r.pass = rep.sufficiently_nondegenerate();
  r.result["applicable"] = rep.applicable;
  r.result["rejected"] = rep.rejected;
  r.result["N"] = {{"pass", rep.n.pass}, {"strong_growth", rep.n.strong_growth}, {"s", rep.n.s}};
  r.result["ranks"] = {{"square", rep.rank_square},
                       {"upsilon", rep.rank_upsilon},
                       {"upsilon_plus_pi", rep.rank_upsilon_pi},
                       {"nabla", rep.rank_nabla}};
  r.result["chain"] = verdict_json(rep.chain);
  r.result["R"] = verdict_json(rep.r);
  r.result["R+"] = verdict_json(rep.r_plus);
  r.result["pi_filtration"] = rep.pi_filtration;
  r.result["G"] = verdict_json(rep.g);
  r.result["G_variant"] = rep.uses_g_prime ? "G'" : "G";
  r.result["sufficiently_nondegenerate"] = r.pass;
  if (!rep.applicable) {
    r.line("rejected: " + rep.rejected);
    return r;
  }
  auto v = [](const Verdict& x) { return std::string(x.pass ? "pass" : "fail") + (x.detail.empty() ? "" : " (" + x.detail + ")"); };
  r.line("(N): " + std::string(rep.n.pass ? "pass" : "fail") + ", strong growth " + growth_text(rep.n.strong_growth) +
         ", s = " + std::to_string(rep.n.s));
  if (!rep.rejected.empty()) r.line("stopped: " + rep.rejected);
  if (rep.n.pass) {
    r.line("rank chain: " + v(rep.chain));
    r.line("(R): " + v(rep.r));
    r.line("(R+): " + v(rep.r_plus));
    r.line(std::string(rep.uses_g_prime ? "(G')" : "(G)") + ": " + v(rep.g));
  }
  r.line(std::string("sufficiently non-degenerate: ") + (r.pass ? "yes" : "no"));
  return r;
}

Report cmd_solve(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const Distribution d = working_distribution(s, o.cartan);
  SolverOptions so;
  so.budget = o.budget;
  if (!o.weights.empty()) {
    so.weights = coordinate_weights_from_json(read_json_file(o.weights));
  } else if (s.ek_order) {
    so.weights = s.monge ? monge_y_weights(*s.ek_order) : ek_reduction_weights(*s.ek_order);
  }
  const SolverResult res = solve_polynomial_symmetries(d, o.degree, so);
  r.result["degree"] = o.degree;
  r.result["weighted"] = so.weights.has_value();
  r.result["unknowns"] = res.unknowns;
  r.result["equations"] = res.equations;
  r.result["dimension"] = res.dimension();
  Json basis = Json::array();
  for (const auto& f : res.basis) basis.push_back(to_json(f));
  r.result["basis"] = basis;
  r.line(std::string(so.weights ? "weighted " : "") + "degree " + std::to_string(o.degree) + ": dimension " +
         std::to_string(res.dimension()));
  for (const auto& f : res.basis) r.line("  " + f.to_string());
  return r;
}

Report cmd_lbt(const Options& o) {
  Report r;
  const Source s = load_source(o);
  const auto& e = require_pde(s, "lbt");
  std::vector<NamedExpr> gfs;
  std::optional<std::vector<VectorField>> target;
  if (!o.generating_functions.empty()) {
    gfs = generating_functions_from_json(read_json_file(o.generating_functions));
  } else if (s.ek_order) {
    gfs = ek_generating_functions(*s.ek_order);
  } else {
    throw Error("lbt needs --generating-functions FILE outside the E_k family");
  }
  if (s.ek_order && o.generating_functions.empty()) {
    const auto red = reduce_equation(e).reduced;
    std::map<std::string, std::string> back;
    for (const auto& [from, to] : ek_to_monge_names(*s.ek_order)) back[to] = from;
    target.emplace();
    for (const auto& [name, X] : ek_fields(*s.ek_order)) target->push_back(rename_chart(X, red.chart, back));
  }
  const LbtReport rep = lbt_report(e, gfs, target ? &*target : nullptr);
  Json entries = Json::array();
  for (const auto& en : rep.entries) {
    entries.push_back({{"name", en.label},
                       {"external", en.external},
                       {"witness", en.witness},
                       {"pushed", to_json(en.pushed)},
                       {"pushed_zero", en.pushed_zero}});
    r.line((en.external ? (en.pushed_zero ? "ZERO " : "OK   ") : "FAIL ") + en.label +
           (en.external ? "" : ": " + en.witness));
    r.pass = r.pass && en.external;
  }
  r.result["entries"] = entries;
  r.result["source_rank"] = rep.source_rank;
  r.result["image_rank"] = rep.image_rank;
  r.result["kernel_dim"] = rep.kernel_dim();
  r.result["kernel_witnesses"] = rep.kernel_witnesses;
  r.result["injective"] = rep.injective();
  r.result["reduced_weak_growth"] = rep.reduced_weak_growth;
  r.result["reduced_nonholonomic"] = rep.reduced_nonholonomic;
  r.result["matches_target"] = rep.matches_target ? Json(*rep.matches_target) : Json(nullptr);
  r.line("rank " + std::to_string(rep.source_rank) + " -> " + std::to_string(rep.image_rank) + ", kernel " +
         std::to_string(rep.kernel_dim()) + (rep.injective() ? " (injective)" : " (not injective)"));
  r.line("reduced weak growth " + growth_text(rep.reduced_weak_growth) +
         (rep.reduced_nonholonomic ? "" : ": first integral, surjectivity evidence negative"));
  if (rep.matches_target) r.line(std::string("image matches the listed basis: ") + (*rep.matches_target ? "yes" : "no"));
  return r;
}

Report cmd_catalog(const Options&) {
  Report r;
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    list.push_back({{"name", e.name}, {"parameters", e.parameters}, {"description", e.description}});
    r.line(e.name + (e.parameters.empty() ? "" : " " + e.parameters) + ": " + e.description);
  }
  r.result["models"] = list;
  return r;
}

Json envelope(const std::vector<std::string>& args, const Report& r) {
  return {{"invocation", args}, {"status", r.pass ? "pass" : "fail"}, {"result", r.result}};
}

int emit(const std::vector<std::string>& args, const Report& r, bool json, std::ostream& out) {
  if (json) {
    out << envelope(args, r).dump(2) << "\n";
  } else {
    for (const auto& l : r.text) out << l << "\n";
  }
  return r.pass ? 0 : 1;
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Report cmd_validate(const Options& o, std::ostream& err) {
  Report r;
  const Json doc = read_json_file(o.report);
  for (const char* key : {"invocation", "status", "result"})
    if (!doc.contains(key)) throw Error(o.report + ": missing field '" + std::string(key) + "'");
  std::vector<std::string> args;
  for (const auto& a : doc.at("invocation")) {
    if (!a.is_string()) throw Error(o.report + ": invocation must be a list of strings");
    args.push_back(a.get<std::string>());
  }
  if (args.empty() || args[0] == "validate") throw Error(o.report + ": not a re-runnable report");
  if (std::find(args.begin(), args.end(), "--json") == args.end()) throw Error(o.report + ": not a --json report");
  std::ostringstream again;
  const int code = run_inner(args, again, err);
  if (code == 2) throw Error(o.report + ": the recorded invocation no longer runs");
  const Json fresh = parse_json(again.str(), "re-run output");
  const bool same = fresh == doc;
  r.result["report"] = o.report;
  r.result["identical"] = same;
  r.pass = same;
  r.line(same ? "valid: re-run reproduces the report" : "mismatch: re-run differs from the report");
  if (!same) {
    const Json diff = Json::diff(doc, fresh);
    r.result["diff"] = diff;
    if (!diff.empty()) r.line("first difference at " + diff[0].value("path", std::string("/")));
  }
  return r;
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jetsym: symmetries and reductions of class-1 PDE systems"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool model) {
    c->add_flag("--json", o.json, "Machine-readable report");
    c->add_option("--seed", o.seed, "Seed for generic points (default 0)");
    c->add_option("--max-steps", o.max_steps, "Flag and closure step limit")->check(CLI::PositiveNumber);
    if (!model) return;
    c->add_option("--model", o.model, "Catalog model name");
    c->add_option("--file", o.file, "Model file (JSON)");
    c->add_option("--k", o.k, "Order parameter k");
    c->add_option("--m", o.m, "Parameter m");
    c->add_option("--mlist", o.mlist, "Weight list, e.g. --mlist 0,1,2")->delimiter(',');
    c->add_flag("--cartan", o.cartan, "Use the Cartan distribution of a PDE instead of its reduction");
  };
  std::map<std::string, std::function<Report()>> run;
  auto sub = [&](const std::string& name, const std::string& help, bool model, std::function<Report()> f) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c, model);
    run[name] = std::move(f);
    return c;
  };

  sub("flags", "Weak and strong derived flags", true, [&] { return cmd_flags(o); })
      ->add_flag("--strong", o.strong, "Strong flag only");
  sub("cauchy", "Cauchy characteristics", true, [&] { return cmd_cauchy(o); });
  sub("reduce", "Reduction of a PDE by its Cauchy characteristics", true, [&] { return cmd_reduce(o); });
  sub("symbol", "Symbol algebra at a generic point", true, [&] { return cmd_symbol(o); });
  auto* tanaka = sub("tanaka", "Tanaka prolongation", true, [&] { return cmd_tanaka(o); });
  tanaka->add_option("--builtin", o.builtin, "Built-in algebra: nk");
  tanaka->add_option("--max-degree", o.max_degree, "Highest layer computed")->check(CLI::NonNegativeNumber);
  auto* chk = sub("check-symmetry", "Check listed symmetries", true, [&] { return cmd_check_symmetry(o); });
  chk->add_option("--generating-functions", o.generating_functions, "Generating functions file");
  chk->add_option("--fields", o.fields, "Vector fields file on the model chart");
  sub("commutators", "Commutator table of named fields", true, [&] { return cmd_commutators(o); })
      ->add_option("--fields", o.fields, "Vector fields file with its own chart");
  auto* gr = sub("grading", "Check gradings of a commutator table", true, [&] { return cmd_grading(o); });
  gr->add_option("--fields", o.fields, "Vector fields file with its own chart");
  gr->add_option("--weights", o.weights, "Weights file: name -> integer or list");
  sub("nondeg", "Sufficient non-degeneracy suite", true, [&] { return cmd_nondeg(o); });
  auto* solve = sub("solve-sym", "Polynomial symmetries up to a degree", true, [&] { return cmd_solve(o); });
  solve->add_option("--degree", o.degree, "Degree bound (weighted when weights apply)");
  solve->add_option("--weights", o.weights, "Coordinate weights file");
  solve->add_option("--budget", o.budget, "Limit on equations times unknowns");
  sub("lbt", "Restriction of external symmetries to the reduction", true, [&] { return cmd_lbt(o); })
      ->add_option("--generating-functions", o.generating_functions, "Generating functions file");
  sub("catalog", "List catalog models", false, [&] { return cmd_catalog(o); });
  sub("validate", "Re-run a --json report and compare", false, [&] { return cmd_validate(o, err); })
      ->add_option("report", o.report, "Report file")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  try {
    const Report r = run.at(chosen->get_name())();
    return emit(args, r, o.json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const GenericityError& e) {
    err << "genericity error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_inner(args, out, err);
}

}  // namespace jetsym
