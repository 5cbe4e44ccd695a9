#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/expression.hpp"
#include "jetsym/geometry.hpp"

namespace jetsym {

/// Derivative multi-index (i_1, ..., i_n) of a scalar unknown u.
using MultiIndex = std::vector<unsigned>;

unsigned order(const MultiIndex& s);
MultiIndex unit_index(std::size_t n, std::size_t i);
MultiIndex plus_unit(MultiIndex s, std::size_t i);

/// All multi-indices of length n and the given order, x-heaviest first.
std::vector<MultiIndex> multi_indices(std::size_t n, unsigned ord);
/// Orders 0..max_order concatenated.
std::vector<MultiIndex> multi_indices_upto(std::size_t n, unsigned max_order);

/// "u" for the zero index, "u" + digits while every entry is below 10 and
/// n <= 3, otherwise "u" + entries joined by '_'.
std::string jet_name(const MultiIndex& s);
/// x, y, z for n <= 3, else x1..xn.
std::vector<std::string> default_base(std::size_t n);

/// Reads jet names and their aliases: u, u20, u2_0, u_xy (letters of the
/// base), and for two base variables p q r s t alpha beta gamma delta (also
/// in Greek).
std::optional<MultiIndex> parse_jet_name(const std::string& name, const std::vector<std::string>& base);

/// Resolver that maps jet aliases and the Greek lambda to chart names.
NameResolver jet_resolver(const std::vector<std::string>& base, VarList vars);

/// Coordinates of J^k(R^n, R): base, then u_s for |s| <= k.
VarList jet_chart(const std::vector<std::string>& base, unsigned k);

/// Scalar PDE system in parametric form.
///
/// Jets of order below k are coordinates unless fixed by a lower-order
/// equation (or a derivative of one); every order-k jet is an expression in
/// the coordinates and the parameters. Coordinates: base, free jets, parameters.
class EquationChart {
public:
  EquationChart(std::string name, std::vector<std::string> base, std::vector<std::string> parameters, unsigned order,
                const std::vector<std::pair<MultiIndex, std::string>>& top,
                const std::vector<std::pair<MultiIndex, std::string>>& lower = {});

  const std::string& name() const { return name_; }
  std::size_t n() const { return base_.size(); }
  unsigned order() const { return order_; }
  /// Smallest order among the defining equations.
  unsigned min_equation_order() const { return min_order_; }
  const std::vector<std::string>& base() const { return base_; }
  const std::vector<std::string>& parameters() const { return params_; }
  const VarList& vars() const { return vars_; }
  const std::vector<MultiIndex>& free_jets() const { return free_; }
  bool is_free(const MultiIndex& s) const;
  /// u_s on the equation for |s| <= order(): a coordinate or an expression.
  const RationalFunction& value(const MultiIndex& s) const;
  /// Jets that are not coordinates, with their expressions, in jet order.
  std::vector<std::pair<MultiIndex, RationalFunction>> principal() const;

  RationalFunction parse(const std::string& expr) const;

private:
  std::string name_;
  std::vector<std::string> base_;
  std::vector<std::string> params_;
  unsigned order_ = 0;
  unsigned min_order_ = 0;
  VarList vars_;
  std::vector<MultiIndex> free_;
  std::map<MultiIndex, RationalFunction> value_;
};

/// Truncated total derivative D_i: no component along the parameters.
VectorField total_derivative(const EquationChart& e, std::size_t i);
/// <D_1, ..., D_n, d/d(parameter) ...>.
Distribution cartan_on_equation(const EquationChart& e);
/// Contact forms du_s - sum_i u_{s+1_i} dx^i for |s| < l pulled back to the equation.
std::vector<OneForm> cartan_lift_annihilator(const EquationChart& e, unsigned l);
/// The distribution on which the given forms vanish.
Distribution kernel_distribution(const VarList& vars, const std::vector<OneForm>& forms);

/// Full total derivative on jet_chart(base, k), exact on functions of order < k.
VectorField jet_total_derivative(const std::vector<std::string>& base, unsigned k, std::size_t i);

/// Parses a generating function on J^1 with n base variables.
RationalFunction parse_generating_function(const std::string& text, std::size_t n);

/// X_f = -sum f_{u_i} D_i + f d_u + sum D_i(f) d_{u_i} on J^1.
VectorField contact_field(const RationalFunction& f, std::size_t n);
/// The prolongation of X_f to J^k (f given on J^1). Computed on J^{k+1}; the
/// order k+1 terms must cancel.
VectorField prolong_contact_field(const RationalFunction& f, std::size_t n, unsigned k);
/// Generating function of a contact field on J^1: f = theta(X) = X^u - sum u_i X^{x_i}.
RationalFunction generating_function(const VectorField& x, std::size_t n);

struct TangencyCheck {
  bool tangent = false;
  /// The restricted field on the equation chart (valid when tangent).
  VectorField field;
  std::string witness;
};

/// Whether the prolonged X_f is tangent to the equation; the parameter
/// components are solved for.
TangencyCheck is_external_symmetry(const EquationChart& e, const RationalFunction& f);

/// Underdetermined ODE system in one base variable x with dependents w^j of
/// orders o_j and top derivatives w^j_{o_j} = top_j(parameter).
/// Coordinates: x, then w^j, w^j_1, ..., w^j_{o_j - 1} per dependent, then the parameter.
class MongeChart {
public:
  struct Dependent {
    std::string name;
    unsigned order;
    std::string top;  // expression in the parameter
  };
  MongeChart(std::string name, std::vector<Dependent> dependents, std::string parameter = "lam");

  const std::string& name() const { return name_; }
  const VarList& vars() const { return vars_; }
  std::size_t size() const { return deps_.size(); }
  const Dependent& dependent(std::size_t j) const { return deps_[j]; }
  const std::string& parameter() const { return param_; }
  /// Name of w^j_i (i below the order of w^j).
  std::string coordinate(std::size_t j, unsigned i) const;
  const RationalFunction& top(std::size_t j) const { return top_[j]; }
  /// <D_x, d/d(parameter)>.
  Distribution distribution() const;
  VectorField total_derivative() const;
  RationalFunction parse(const std::string& expr) const;

private:
  std::string name_;
  std::vector<Dependent> deps_;
  std::string param_;
  VarList vars_;
  std::vector<RationalFunction> top_;
};

}  // namespace jetsym
