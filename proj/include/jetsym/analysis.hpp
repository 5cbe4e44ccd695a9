#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/catalog.hpp"
#include "jetsym/geometry.hpp"
#include "jetsym/graded_lie.hpp"
#include "jetsym/jet.hpp"

namespace jetsym {

// ---------------------------------------------------------------------------
// Reduction of an equation by its Cauchy characteristics

struct PdeReduction {
  Distribution cartan;
  Distribution pi;
  Transversal slice;
  Reduction reduced;
};

/// Pi = Ch(C_E) must have rank n - 1. The slice fixes every base coordinate
/// but the first, at 0 when transversal there and otherwise at 1.
PdeReduction reduce_equation(const EquationChart& e);

// ---------------------------------------------------------------------------
// Non-degeneracy

struct NCheck {
  bool pass = false;
  std::vector<std::size_t> strong_growth;
  /// First step after the leading 2 whose growth exceeds 1 (0 when none).
  std::size_t s = 0;
};

/// Not Goursat: the strong growth vector of a rank 2 distribution is not (2, 1, ..., 1).
NCheck check_N(const Distribution& d, int max_steps = 12);

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct NondegeneracyReport {
  bool applicable = false;
  /// Why the suite stopped early; empty when every stage ran.
  std::string rejected;
  NCheck n;
  std::vector<std::size_t> cartan_strong_growth;
  std::size_t rank_square = 0;          // rank of Ch(nabla_s) on E
  std::size_t rank_upsilon = 0;         // rank of upsilon_{s-2}
  std::size_t rank_upsilon_pi = 0;      // rank of upsilon_{s-2} + Pi
  std::size_t rank_nabla = 0;           // rank of nabla_{s-2} on E
  Verdict chain;                        // the three ranks n+s-4, n+s-3, n+s-2 and the inclusions
  Verdict r;
  Verdict r_plus;
  std::vector<std::size_t> pi_filtration;  // ranks of Pi_0, Pi_1, ...
  bool uses_g_prime = false;
  Verdict g;
  bool sufficiently_nondegenerate() const { return applicable && n.pass && chain.pass && r_plus.pass && g.pass; }
};

NondegeneracyReport nondegeneracy_suite(const EquationChart& e, int max_steps = 12);

// ---------------------------------------------------------------------------
// Symmetries of distributions

/// theta([X, v]) = 0 for every basis field v and every annihilator theta.
Verdict verify_symmetry_of_distribution(const Distribution& d, const VectorField& x);

/// Lifts a field given on (x, w^j) (components may also involve w^j_1 and
/// the parameter) to the whole chart of a Monge system. Throws Error when the
/// lift is inconsistent or needs derivatives of the parameter.
VectorField point_prolongation(const PointField& x, const MongeChart& chart);

struct CommutatorTable {
  std::vector<std::string> names;
  bool independent = false;
  bool closed = false;
  /// structure[i][j] = coefficients of [f_i, f_j] in the basis (when closed).
  std::vector<std::vector<QVector>> structure;
  std::vector<std::string> escapes;
  /// As a Lie algebra with every element in degree -1 (structure only).
  GradedLieAlgebra as_algebra() const;
  QVector bracket(const std::string& a, const std::string& b) const;
};

CommutatorTable commutator_table(const std::vector<std::pair<std::string, VectorField>>& fields);

/// Flattens fields over a common denominator into Q-vectors; their Q-linear
/// relations are those of the fields.
std::vector<QVector> flatten_fields(const std::vector<VectorField>& fields);
std::size_t rank_over_q(const std::vector<VectorField>& fields);

struct GradingCheck {
  bool pass = false;
  std::string witness;
};

/// w([a, b]) = w(a) + w(b) componentwise for every nonzero bracket.
GradingCheck grading_check(const CommutatorTable& table, const Weights& weights);
/// The same check for the bracket relations of a Lie-algebra file.
GradingCheck grading_check(const GradedLieAlgebra& a, const Weights& weights);

struct SolverOptions {
  /// Integer weight per coordinate; absent means unweighted total degree.
  std::optional<std::map<std::string, int>> weights;
  /// Upper limit on unknowns times equations.
  std::size_t budget = 200'000'000;
};

struct SolverResult {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::vector<VectorField> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Polynomial symmetries X with deg X^i <= degree, or, weighted, with
/// wt(m) - wt(x_i) <= degree for every monomial m of X^i. Throws
/// BudgetExceeded with the matrix size when over budget.
SolverResult solve_polynomial_symmetries(const Distribution& d, int degree, const SolverOptions& opts = {});

/// Coordinate weights of the reduced E_k chart: x, lam 1, u_ij k + 1 - i.
std::map<std::string, int> ek_reduction_weights(unsigned k);
/// The same on the monge_y(k) chart: x, lam 1, w^j_i k + 1 - i.
std::map<std::string, int> monge_y_weights(unsigned k);

struct TanakaBound {
  SymbolAlgebra symbol;
  TanakaResult tanaka;
  bool bounded = false;  // false when the cutoff was reached before a zero layer
  std::size_t value = 0;
};

TanakaBound tanaka_upper_bound(const Distribution& d, std::uint64_t seed = 0, int max_degree = 8);

/// Coordinates of a field's class in g_{-1} of the symbol.
QVector symbol_class(const SymbolAlgebra& s, const VectorField& v);

// ---------------------------------------------------------------------------
// Tangent-cone systems: quotient by the extra parameters, then by the Cauchy line

struct ConeReduction {
  std::size_t m = 0;
  Distribution cartan;
  Distribution closure;            // ad closure of the Cartan distribution under the zeta directions
  std::vector<VectorField> eta;    // eta_1 = sum_i lam^i d/du_{k-1-i,i}, eta_{p+1} = d_lam^p eta_1
  bool closure_is_cartan_plus_eta = false;
  Reduction tilde;                 // closure / <d_zeta> on zeta = 0
  VectorField xi;                  // Dbar_y - lam Dbar_x on the tilde chart
  bool xi_spans_cauchy = false;
  Reduction plus;                  // tilde / <xi> on y = 0
  Distribution delta;              // <Dbar_x, d_lam> on the chart of plus
  std::vector<std::size_t> delta_weak_ranks;
  std::vector<std::size_t> delta_strong_ranks;
  bool plus_is_weak_derived = false;    // plus equals the m-th weak derived of delta
  bool plus_is_strong_derived = false;  // plus equals the m-th strong derived of delta
  bool plus_is_delta_with_eta = false;  // plus equals delta + <eta_1, ..., eta_m>
};

/// For a two-variable system with parameters lam, zeta1, ..., zetam.
ConeReduction cone_reduction(const EquationChart& e);

// ---------------------------------------------------------------------------
// Restriction homomorphism from external symmetries to symmetries of the reduction

struct LbtEntry {
  std::string label;
  bool external = false;
  std::string witness;
  VectorField restricted;
  VectorField pushed;
  bool pushed_zero = false;
  bool pushed_symmetry = false;
};

struct LbtReport {
  PdeReduction reduction;
  std::vector<LbtEntry> entries;
  std::size_t source_rank = 0;  // Q-rank of the restricted fields
  std::size_t image_rank = 0;   // Q-rank of the pushforwards
  std::size_t kernel_dim() const { return source_rank - image_rank; }
  std::vector<std::string> kernel_witnesses;  // entries pushing to zero
  std::vector<std::size_t> reduced_weak_growth;
  bool reduced_nonholonomic = false;  // weak flag reaches the full tangent space
  std::optional<bool> matches_target;  // image span equals the given basis span
  bool injective() const { return kernel_dim() == 0; }
};

LbtReport lbt_report(const EquationChart& e, const std::vector<NamedExpr>& generating_functions,
                     const std::vector<VectorField>* target_basis = nullptr);

}  // namespace jetsym
