#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/jet.hpp"

namespace jetsym {

EquationChart ek(unsigned k);
EquationChart fk(unsigned k, unsigned m);
EquationChart rkm(unsigned k, unsigned m);
/// {u_xy = 0, u_yyy = 0} and, with bar set, {u_yy = 0, u_xxy = 0}.
EquationChart goursat_pair(bool bar = false);
/// t = s^2/2, u_xxy = s u_xxx; F = s^2/2, A = s, B = 0.
EquationChart e2e3_generic();
/// u_xxy = F(u_xxx) with F = lam^2/2 and the compatible G, H.
EquationChart three_e3_generic();
EquationChart s8_2e2e1();
EquationChart s8_2nd_order();
EquationChart s8_3e3_3e2();
EquationChart s8_9e3();
/// u_s = lam^(S+1)/(S+1), S = sum_a s_a m_a over all |s| = order, n = m.size().
EquationChart weighted_pure_order(unsigned order, const std::vector<unsigned>& m);

/// <d_x + z1 d_z + z2 d_z1 + z2^2 d_y, d_z2> on (x, y, z, z1, z2).
Distribution hilbert_cartan();
/// w^j of order k - j with w^j_{k-j} = lam^(j+1)/(j+1).
MongeChart monge_y(unsigned k);
/// v1'' = lam^(m1+1)/(m1+1) and v_j' = lam^(m_j+1)/(m_j+1).
MongeChart monge_kl(const std::vector<unsigned>& m);

struct CatalogParams {
  std::optional<unsigned> k;
  std::optional<unsigned> m;
  std::optional<std::vector<unsigned>> mlist;
};

struct Model {
  std::string name;
  std::string description;
  std::optional<EquationChart> pde;
  std::optional<MongeChart> monge;
  std::optional<Distribution> distribution;
};

struct CatalogEntry {
  std::string name;
  std::string parameters;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Throws Error("unknown catalog model ...") or on out-of-range parameters.
Model make_model(const std::string& name, const CatalogParams& params);

// ---------------------------------------------------------------------------
// Listed symmetry data for the E_k and F_k families

using NamedExpr = std::pair<std::string, std::string>;

/// Generating functions on J^1(R^2) in the jet names u, u10, u01.
std::vector<NamedExpr> ek_generating_functions(unsigned k);
std::vector<NamedExpr> fk_generating_functions(unsigned k, unsigned m);

struct PointField {
  std::string name;
  std::vector<std::pair<std::string, std::string>> components;  // slots x, w0, ..., w{k-1}
};

/// X, W_i^j, L, R, S1, S2, T on the chart of monge_y(k).
std::vector<PointField> ek_point_fields(unsigned k);
std::string w_label(unsigned i, unsigned j);

struct Relation {
  std::string a, b;
  std::vector<std::pair<std::string, Rational>> value;
};
/// Nonzero brackets of the E_k symmetry algebra in the basis above.
std::vector<Relation> ek_relations(unsigned k);

using Weights = std::map<std::string, std::vector<int>>;
Weights ek_weights(unsigned k);
Weights ek_bigrading(unsigned k);

/// u_{ij} -> w^j_i from the reduced E_k chart to the monge_y(k) chart.
std::map<std::string, std::string> ek_to_monge_names(unsigned k);

}  // namespace jetsym
