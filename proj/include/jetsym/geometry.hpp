#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/graded_lie.hpp"
#include "jetsym/linear_algebra.hpp"

namespace jetsym {

/// Rational values for every coordinate of a chart, in chart order.
using PointAssignment = std::vector<Rational>;

/// Derivation sum_i comp[i] d/d(vars[i]) with rational-function coefficients.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(VarList vars);
  VectorField(VarList vars, std::vector<RationalFunction> comp);
  /// The coordinate field d/d(name).
  static VectorField coordinate(const VarList& vars, const std::string& name);
  /// Parses components given as (coordinate, expression) pairs.
  static VectorField parse(const VarList& vars, const std::vector<std::pair<std::string, std::string>>& comps);

  const VarList& vars() const { return vars_; }
  std::size_t size() const { return comp_.size(); }
  const RationalFunction& operator[](std::size_t i) const { return comp_[i]; }
  RationalFunction& operator[](std::size_t i) { return comp_[i]; }
  const RationalFunction& component(const std::string& name) const;
  const std::vector<RationalFunction>& components() const { return comp_; }
  bool is_zero() const;

  /// Directional derivative v(f).
  RationalFunction apply(const RationalFunction& f) const;
  QVector evaluate(const PointAssignment& p) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const RationalFunction& f);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const RationalFunction& f, VectorField v) { return v *= f; }
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string() const;

private:
  VarList vars_;
  std::vector<RationalFunction> comp_;
};

/// [v, w]^i = v(w^i) - w(v^i).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

/// 1-form sum_i comp[i] d(vars[i]).
struct OneForm {
  VarList vars;
  std::vector<RationalFunction> comp;
  RationalFunction operator()(const VectorField& v) const;
  std::string to_string() const;
};

/// Span over the rational-function field of finitely many vector fields.
/// The generators are kept as given; basis() is a reduced echelon form.
class Distribution {
public:
  Distribution() = default;
  Distribution(VarList vars, std::vector<VectorField> generators);
  explicit Distribution(const RfEchelon& e);

  const VarList& vars() const { return vars_; }
  const std::vector<VectorField>& generators() const { return generators_; }
  const std::vector<VectorField>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return vars_ ? vars_->size() : 0; }

  bool contains(const VectorField& v) const;
  /// Components of v left after removing its pivot-column part; zero iff v is in the span.
  VectorField residual(const VectorField& v) const;
  /// Coefficients c with v = sum c_j basis()[j], or nullopt.
  std::optional<std::vector<RationalFunction>> coordinates(const VectorField& v) const;
  std::vector<OneForm> annihilator() const;

  Distribution operator+(const Distribution& o) const;

private:
  VarList vars_;
  std::vector<VectorField> generators_;
  std::vector<VectorField> basis_;
  std::vector<std::size_t> pivots_;
};

/// Generic rank over the function field.
std::size_t generic_rank(const Distribution& d);
std::vector<OneForm> annihilator(const Distribution& d);
bool spans_equal(const Distribution& a, const Distribution& b);
bool is_involutive(const Distribution& d);

struct Flag {
  std::vector<Distribution> steps;
  std::vector<std::size_t> growth;
  bool stabilized = false;
  std::vector<std::size_t> ranks() const;
};

Flag weak_flag(const Distribution& d, int max_steps = 12);
Flag strong_flag(const Distribution& d, int max_steps = 12);
/// One strong derived step: D + [D, D].
Distribution derived(const Distribution& d);

/// Ch(D) = {X in D : [X, D] in D}.
Distribution cauchy_characteristics(const Distribution& d);

/// Smallest distribution containing d and closed under brackets with p.
Distribution ad_closure(const Distribution& d, const Distribution& p, int max_steps = 12);

using Transversal = std::vector<std::pair<std::string, Rational>>;

struct Reduction {
  VarList chart;
  Distribution dist;
};

/// Quotient of d by the integrable pi on the slice given by transversal.
Reduction reduce_along(const Distribution& d, const Distribution& pi, const Transversal& transversal);

/// Image on the slice chart of a field that preserves pi: subtracts the pi
/// part that moves the transversal coordinates, then restricts.
VectorField push_to_slice(const VectorField& x, const Distribution& pi, const Transversal& transversal,
                          const VarList& slice_chart);

/// Re-expresses a field on another chart whose coordinates are renamed
/// (old name -> new name); unmapped names keep their name.
VectorField rename_chart(const VectorField& v, const VarList& target, const std::map<std::string, std::string>& rename);
Distribution rename_chart(const Distribution& d, const VarList& target,
                          const std::map<std::string, std::string>& rename);

/// <v1 + t v2, d/dt> on the chart extended by the fiber coordinate t.
Reduction prolong_rank2(const Distribution& d, const std::string& fiber = "t");

struct Deprolongation {
  bool possible = false;
  std::size_t cauchy_rank = 0;
  Transversal slice;
  Reduction result;
};

/// Quotient of [D, D] by its Cauchy line when that line exists.
Deprolongation deprolong(const Distribution& d);

/// Draws coordinates from {-9..9}\{0} over denominators 1..3.
PointAssignment random_point(const VarList& vars, std::mt19937_64& rng);

struct SymbolAlgebra {
  GradedLieAlgebra algebra;
  /// Field representing each basis element, in algebra order.
  std::vector<VectorField> representatives;
  PointAssignment point;
  std::vector<std::size_t> generic_growth;
};

/// Graded algebra of the weak flag at p. Throws GenericityError when the
/// pointwise growth differs from the generic growth or a denominator vanishes.
SymbolAlgebra symbol_algebra(const Distribution& d, const PointAssignment& p, int max_depth = 12);
/// Tries up to 20 random points drawn from one generator seeded with seed.
SymbolAlgebra symbol_algebra(const Distribution& d, std::uint64_t seed, int max_depth = 12);

}  // namespace jetsym
