#include "jetsym/catalog.hpp"

#include <algorithm>

namespace jetsym {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

// lam^e / e as an expression (e >= 1).
std::string power_over(const std::string& var, unsigned e) {
  std::string s = e == 1 ? var : var + "^" + std::to_string(e);
  return e == 1 ? s : s + "/" + std::to_string(e);
}

std::vector<std::pair<MultiIndex, std::string>> zero_jets(const std::vector<MultiIndex>& idx) {
  std::vector<std::pair<MultiIndex, std::string>> out;
  for (const auto& s : idx) out.emplace_back(s, "0");
  return out;
}

std::vector<std::pair<MultiIndex, std::string>> planar_top(unsigned k, unsigned extra_dims) {
  std::vector<std::pair<MultiIndex, std::string>> top;
  for (unsigned i = 0; i <= k; ++i) {
    MultiIndex s = {k - i, i};
    s.resize(2 + extra_dims, 0);
    top.emplace_back(s, power_over("lam", i + 1));
  }
  return top;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("parameter out of range: " + what);
}

}  // namespace

EquationChart ek(unsigned k) {
  require(k >= 1, "E_k needs k >= 1");
  return EquationChart("ek", {"x", "y"}, {"lam"}, k, planar_top(k, 0));
}

EquationChart fk(unsigned k, unsigned m) {
  require(k >= 1, "F_k needs k >= 1");
  std::vector<std::pair<MultiIndex, std::string>> top;
  for (unsigned i = 0; i <= k; ++i) top.emplace_back(MultiIndex{k - i, i}, power_over("lam", i * m + 1));
  return EquationChart("fk", {"x", "y"}, {"lam"}, k, top);
}

EquationChart rkm(unsigned k, unsigned m) {
  require(k >= 1 && m < k, "R_k^m needs 0 <= m < k");
  std::vector<std::string> params = {"lam"};
  for (unsigned j = 1; j <= m; ++j) params.push_back("zeta" + std::to_string(j));
  std::vector<std::pair<MultiIndex, std::string>> top;
  for (unsigned i = 0; i <= k; ++i) {
    std::string e = power_over("lam", i + 1);
    for (unsigned j = 1; j <= std::min(m, i + 1); ++j) {
      const Rational c = factorial(i) / factorial(i + 1 - j);
      const unsigned p = i + 1 - j;
      e += " + " + rat_str(c) + (p > 0 ? "*lam^" + std::to_string(p) : "") + "*zeta" + std::to_string(j);
    }
    top.emplace_back(MultiIndex{k - i, i}, e);
  }
  return EquationChart("rkm", {"x", "y"}, params, k, top);
}

EquationChart goursat_pair(bool bar) {
  if (!bar) return EquationChart("goursat-pair", {"x", "y"}, {"lam"}, 3, {{{3, 0}, "lam"}, {{0, 3}, "0"}}, {{{1, 1}, "0"}});
  return EquationChart("goursat-pair-bar", {"x", "y"}, {"lam"}, 3, {{{3, 0}, "lam"}, {{2, 1}, "0"}}, {{{0, 2}, "0"}});
}

EquationChart e2e3_generic() {
  return EquationChart("s3-e2e3-generic", {"x", "y"}, {"lam"}, 3,
                       {{{3, 0}, "lam"}, {{2, 1}, "s*lam"}, {{1, 2}, "s^2*lam"}, {{0, 3}, "s^3*lam"}},
                       {{{0, 2}, "s^2/2"}});
}

EquationChart three_e3_generic() {
  return EquationChart("s3-3e3-generic", {"x", "y"}, {"lam"}, 3, planar_top(3, 0));
}

EquationChart s8_2e2e1() {
  return EquationChart("s8-2e2e1", {"x", "y", "z"}, {"lam"}, 2, planar_top(2, 1), {{{0, 0, 1}, "0"}});
}

EquationChart s8_2nd_order() {
  auto top = planar_top(2, 1);
  for (auto& z : zero_jets({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}})) top.push_back(z);
  return EquationChart("s8-2nd-order", {"x", "y", "z"}, {"lam"}, 2, top);
}

EquationChart s8_3e3_3e2() {
  return EquationChart("s8-3e3-3e2", {"x", "y", "z"}, {"lam"}, 3, planar_top(3, 1),
                       zero_jets({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));
}

EquationChart s8_9e3() {
  auto top = planar_top(3, 1);
  for (const auto& s : multi_indices(3, 3))
    if (s[2] > 0) top.emplace_back(s, "0");
  return EquationChart("s8-9e3", {"x", "y", "z"}, {"lam"}, 3, top);
}

EquationChart weighted_pure_order(unsigned ord, const std::vector<unsigned>& m) {
  require(ord >= 1 && m.size() >= 2, "needs order >= 1 and at least two weights");
  std::vector<std::pair<MultiIndex, std::string>> top;
  for (const auto& s : multi_indices(m.size(), ord)) {
    unsigned w = 0;
    for (std::size_t a = 0; a < m.size(); ++a) w += s[a] * m[a];
    top.emplace_back(s, power_over("lam", w + 1));
  }
  return EquationChart("s8-order" + std::to_string(ord), default_base(m.size()), {"lam"}, ord, top);
}

Distribution hilbert_cartan() {
  auto v = make_varlist({"x", "y", "z", "z1", "z2"});
  return Distribution(v, {VectorField::parse(v, {{"x", "1"}, {"z", "z1"}, {"z1", "z2"}, {"y", "z2^2"}}),
                          VectorField::coordinate(v, "z2")});
}

MongeChart monge_y(unsigned k) {
  require(k >= 1, "Y_k needs k >= 1");
  std::vector<MongeChart::Dependent> deps;
  for (unsigned j = 0; j < k; ++j) deps.push_back({"w" + std::to_string(j), k - j, power_over("lam", j + 1)});
  return MongeChart("monge-y", deps);
}

MongeChart monge_kl(const std::vector<unsigned>& m) {
  require(m.size() >= 2, "the (kl) system needs at least two weights");
  std::vector<MongeChart::Dependent> deps = {{"v1", 2, power_over("lam", m[0] + 1)}};
  for (std::size_t j = 1; j < m.size(); ++j)
    deps.push_back({"v" + std::to_string(j + 1), 1, power_over("lam", m[j] + 1)});
  return MongeChart("monge-kl", deps);
}

// ---------------------------------------------------------------------------

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"ek", "--k K (>= 1)", "u_{k-i,i} = lam^(i+1)/(i+1)"},
      {"fk", "--k K --m M", "u_{k-i,i} = lam^(im+1)/(im+1)"},
      {"rkm", "--k K --m M (M < K)", "m-th tangent cone of the E_k curve, parameters lam, zeta1..zetaM"},
      {"cartan-1910", "", "u_xx = lam, u_xy = lam^2/2, u_yy = lam^3/3"},
      {"hilbert-cartan", "", "<d_x + z1 d_z + z2 d_z1 + z2^2 d_y, d_z2>"},
      {"monge-y", "--k K", "w^j_{k-j} = lam^(j+1)/(j+1), the reduction of E_k as a Monge system"},
      {"monge-kl", "--mlist m1,m2,...", "v1'' = lam, v_j' = lam^(m_j+1)/(m_j+1)"},
      {"goursat-pair", "", "u_xy = 0, u_yyy = 0"},
      {"goursat-pair-bar", "", "u_yy = 0, u_xxy = 0"},
      {"s3-e2e3-generic", "", "t = s^2/2, u_xxy = s u_xxx"},
      {"s3-3e3-generic", "", "u_xxy = F, u_xyy = G, u_yyy = H with F = lam^2/2"},
      {"s8-2e2e1", "", "the Cartan system plus u_z = 0"},
      {"s8-2nd-order", "", "the Cartan system plus u_xz = u_yz = u_zz = 0"},
      {"s8-3e3-3e2", "", "E_3 in (x, y) plus u_xz = u_yz = u_zz = 0"},
      {"s8-9e3", "", "E_3 in (x, y) plus every third derivative involving z equal to 0"},
      {"s8-order2", "--mlist m1,...,mn", "u_ij = lam^(m_i+m_j+1)/(m_i+m_j+1)"},
      {"s8-order3", "--mlist m1,...,mn", "u_ijk = lam^(m_i+m_j+m_k+1)/(m_i+m_j+m_k+1)"},
  };
  return entries;
}

Model make_model(const std::string& name, const CatalogParams& p) {
  auto k = [&](unsigned def) { return p.k.value_or(def); };
  auto mlist = [&](std::vector<unsigned> def) { return p.mlist.value_or(def); };
  Model out;
  out.name = name;
  for (const auto& e : catalog_entries())
    if (e.name == name) out.description = e.description;
  if (name == "ek") {
    out.pde = ek(k(3));
  } else if (name == "fk") {
    out.pde = fk(k(3), p.m.value_or(2));
  } else if (name == "rkm") {
    out.pde = rkm(k(3), p.m.value_or(2));
  } else if (name == "cartan-1910") {
    out.pde = EquationChart("cartan-1910", {"x", "y"}, {"lam"}, 2, planar_top(2, 0));
  } else if (name == "hilbert-cartan") {
    out.distribution = hilbert_cartan();
  } else if (name == "monge-y") {
    out.monge = monge_y(k(3));
  } else if (name == "monge-kl") {
    out.monge = monge_kl(mlist({0, 1, 2}));
  } else if (name == "goursat-pair") {
    out.pde = goursat_pair(false);
  } else if (name == "goursat-pair-bar") {
    out.pde = goursat_pair(true);
  } else if (name == "s3-e2e3-generic") {
    out.pde = e2e3_generic();
  } else if (name == "s3-3e3-generic") {
    out.pde = three_e3_generic();
  } else if (name == "s8-2e2e1") {
    out.pde = s8_2e2e1();
  } else if (name == "s8-2nd-order") {
    out.pde = s8_2nd_order();
  } else if (name == "s8-3e3-3e2") {
    out.pde = s8_3e3_3e2();
  } else if (name == "s8-9e3") {
    out.pde = s8_9e3();
  } else if (name == "s8-order2") {
    out.pde = weighted_pure_order(2, mlist({0, 1, 2}));
  } else if (name == "s8-order3") {
    out.pde = weighted_pure_order(3, mlist({0, 1, 4}));
  } else {
    throw Error("unknown catalog model '" + name + "'");
  }
  if (out.monge) out.distribution = out.monge->distribution();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<NamedExpr> ek_generating_functions(unsigned k) {
  std::vector<NamedExpr> out;
  for (unsigned d = 0; d < k; ++d)
    for (unsigned j = 0; j <= d; ++j) {
      const unsigned i = d - j;
      std::string e;
      if (i > 0) e += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) e += (e.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
      out.emplace_back(e.empty() ? "1" : e, e.empty() ? "1" : e);
    }
  const std::string kf = factorial(k).get_str(), k1f = factorial(k + 1).get_str();
  out.emplace_back("u_x", "u10");
  out.emplace_back("u_y", "u01");
  out.emplace_back("u + y u_y", "u + y*u01");
  out.emplace_back("(k+1)u - x u_x", std::to_string(k + 1) + "*u - x*u10");
  out.emplace_back("y u_x + x^k/k!", "y*u10 + x^" + std::to_string(k) + "/" + kf);
  out.emplace_back("(k-1)yu - xy u_x - y^2 u_y - x^(k+1)/(k+1)!",
                   std::to_string(k - 1) + "*y*u - x*y*u10 - y^2*u01 - x^" + std::to_string(k + 1) + "/" + k1f);
  return out;
}

std::vector<NamedExpr> fk_generating_functions(unsigned k, unsigned m) {
  auto out = ek_generating_functions(k);
  out.resize(out.size() - 4);
  out.emplace_back("(km+1)u - m x u_x", std::to_string(k * m + 1) + "*u - " + std::to_string(m) + "*x*u10");
  out.emplace_back("u + m y u_y", "u + " + std::to_string(m) + "*y*u01");
  return out;
}

std::string w_label(unsigned i, unsigned j) { return "W_" + std::to_string(i) + "^" + std::to_string(j); }

std::vector<PointField> ek_point_fields(unsigned k) {
  auto w = [](unsigned j) { return "w" + std::to_string(j); };
  auto w1 = [](unsigned j) { return "w" + std::to_string(j) + "_1"; };
  std::vector<PointField> out;
  out.push_back({"X", {{"x", "1"}}});
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j)
      out.push_back({w_label(i, j), {{w(j), i == 0 ? "1" : "x^" + std::to_string(i) + "/" + factorial(i).get_str()}}});
  PointField L{"L", {{w(0), "x^" + std::to_string(k) + "/" + factorial(k).get_str()}}};
  for (unsigned j = 1; j < k; ++j) L.components.emplace_back(w(j), std::to_string(j) + "*" + w1(j - 1));
  out.push_back(L);
  PointField R{"R", {{w(0), "x^" + std::to_string(k + 1) + "/" + factorial(k + 1).get_str()}}};
  for (unsigned j = 1; j < k; ++j)
    R.components.emplace_back(
        w(j), std::to_string(j) + "*(x*" + w1(j - 1) + " - " + std::to_string(k - j) + "*" + w(j - 1) + ")");
  out.push_back(R);
  PointField S1{"S1", {{"x", "x"}}};
  for (unsigned j = 0; j < k; ++j) S1.components.emplace_back(w(j), std::to_string(k - j) + "*" + w(j));
  out.push_back(S1);
  PointField S2{"S2", {}};
  for (unsigned j = 0; j < k; ++j) S2.components.emplace_back(w(j), std::to_string(j + 1) + "*" + w(j));
  out.push_back(S2);
  PointField T{"T", {{"x", "lam"}}};
  for (unsigned j = 0; j + 1 < k; ++j) T.components.emplace_back(w(j), "lam*" + w1(j) + " - " + w(j + 1));
  T.components.emplace_back(w(k - 1), "lam^" + std::to_string(k + 1) + "/" + std::to_string(k * (k + 1)));
  out.push_back(T);
  return out;
}

std::vector<Relation> ek_relations(unsigned k) {
  std::vector<Relation> out;
  const int K = static_cast<int>(k);
  out.push_back({"X", "L", {{w_label(k - 1, 0), 1}}});
  for (unsigned i = 1; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j) {
      out.push_back({"X", w_label(i, j), {{w_label(i - 1, j), 1}}});
      out.push_back({"L", w_label(i, j), {{w_label(i - 1, j + 1), -static_cast<int>(j + 1)}}});
    }
  out.push_back({"X", "R", {{"L", 1}}});
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j + 1 < k; ++j) {
      const int c = static_cast<int>(j + 1) * (static_cast<int>(i + j + 1) - K);
      out.push_back({w_label(i, j), "R", {{w_label(i, j + 1), c}}});
    }
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j) {
      out.push_back({w_label(i, j), "S1", {{w_label(i, j), K - static_cast<int>(i + j)}}});
      out.push_back({w_label(i, j), "S2", {{w_label(i, j), static_cast<int>(j + 1)}}});
      if (j > 0) out.push_back({w_label(i, j), "T", {{w_label(i, j - 1), -1}}});
    }
  out.push_back({"L", "S2", {{"L", 1}}});
  out.push_back({"L", "T", {{"X", 1}}});
  out.push_back({"R", "T", {{"S1", 1}, {"S2", -1}}});
  out.push_back({"R", "S1", {{"R", -1}}});
  out.push_back({"R", "S2", {{"R", 1}}});
  out.push_back({"T", "S1", {{"T", 1}}});
  out.push_back({"T", "S2", {{"T", -1}}});
  return out;
}

Weights ek_weights(unsigned k) {
  const int K = static_cast<int>(k);
  Weights w = {{"X", {-1}}, {"L", {-1}}, {"R", {0}}, {"T", {0}}, {"S1", {0}}, {"S2", {0}}};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j) w[w_label(i, j)] = {static_cast<int>(i) - K - 1};
  return w;
}

Weights ek_bigrading(unsigned k) {
  const int K = static_cast<int>(k);
  Weights b = {{"X", {-1, 0}}, {"L", {0, -1}}, {"R", {1, -1}}, {"T", {-1, 1}}, {"S1", {0, 0}}, {"S2", {0, 0}}};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j)
      b[w_label(i, j)] = {static_cast<int>(i + j) - K, -static_cast<int>(j) - 1};
  return b;
}

std::map<std::string, std::string> ek_to_monge_names(unsigned k) {
  std::map<std::string, std::string> out;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; i + j < k; ++j)
      out[jet_name({i, j})] = "w" + std::to_string(j) + (i == 0 ? "" : "_" + std::to_string(i));
  return out;
}

}  // namespace jetsym
