#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetsym/linear_algebra.hpp"

namespace jetsym {

/// Finite-dimensional graded Lie algebra over Q given by structure constants.
///
/// Basis elements carry a label and an integer degree. bracket(i, j) is a
/// dense coefficient vector over the whole basis; antisymmetry is enforced by
/// set_bracket.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(std::vector<std::string> labels, std::vector<int> degrees);

  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Basis indices of layer d, in basis order.
  std::vector<std::size_t> layer(int d) const;
  /// Distinct degrees present, decreasing (-1, -2, ... for a negative algebra).
  std::vector<int> degrees_present() const;
  /// dim g_{-1}, dim g_{-2}, ... up to the deepest layer (zeros for gaps).
  std::vector<std::size_t> negative_layer_dims() const;

  const QVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  /// Sets [i, j] = v and [j, i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const QVector& v);
  QVector bracket(const QVector& x, const QVector& y) const;
  QVector unit(std::size_t i) const;

  std::string format(const QVector& v) const;

private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<QVector> table_;
};

/// First basis triple violating antisymmetry, grading or Jacobi.
struct JacobiWitness {
  std::array<std::size_t, 3> triple{};
  std::string reason;
};

/// Exhaustive check over all basis pairs and triples; nullopt means pass.
std::optional<JacobiWitness> jacobi_check(const GradedLieAlgebra& a);

/// True when the degree -1 layer generates the whole algebra.
bool is_fundamental(const GradedLieAlgebra& a);

/// The truncated double-graded algebra with basis e10, e01, e11 and e_ij
/// (i, j >= 1, i + j <= k); e_ij has degree -(i + j).
GradedLieAlgebra build_nk(int k);

/// Degree-d element of a Tanaka prolongation. images[x] is the value on the
/// basis element x of m, written in m's coordinates when deg x + d < 0 and in
/// the basis of layer g_{deg x + d} otherwise.
struct GradedMap {
  int degree = 0;
  std::vector<QVector> images;
};

struct TanakaLayer {
  int degree = 0;
  std::vector<GradedMap> basis;
  std::size_t dim() const { return basis.size(); }
};

struct TanakaResult {
  GradedLieAlgebra base;
  std::vector<TanakaLayer> layers;  // degrees 0, 1, ... in order
  /// A layer was empty, so all higher layers vanish.
  bool proved_zero = false;
  int max_degree = 0;

  std::size_t total_dim() const;
  std::size_t layer_dim(int d) const;
};

/// Positive part of the Tanaka prolongation up to max_degree. Throws Error when
/// m has a non-negative layer or is not generated by g_{-1}.
TanakaResult tanaka_prolong(const GradedLieAlgebra& m, int max_degree);

/// 2x2 matrix [[a, b], [c, d]] acting on <e10, e01> by columns:
/// h(e10) = a e10 + c e01, h(e01) = b e10 + d e01.
using Mat2 = std::array<std::array<Rational, 2>, 2>;

struct AppendixReport {
  bool constraints_ok = false;   // consistency yields exactly b' = a'', c'' = d'
  bool g0_formula_ok = false;    // closed-form degree 0 action on level k
  bool g1_formula_ok = false;    // closed-form degree 1 action on level k + 1
  bool truncation_ok = false;    // truncation at level k forces h' = h'' = 0
  std::size_t residual_dim = 0;  // dimension of the surviving (h', h'') family
  std::vector<std::string> constraints;
  std::vector<std::string> mismatches;
  bool ok() const { return constraints_ok && g0_formula_ok && g1_formula_ok && truncation_ok; }
};

/// Symbolic check of the degree 0 and degree 1 derivation formulas on n_k
/// with generic h' = (a', b'; c', d'), h'' = (a'', b''; c'', d''). For k = 3
/// truncation_ok means a residual family survives instead.
AppendixReport verify_appendix_formula(int k);

struct AppendixNumeric {
  bool extends_untruncated = false;  // the Leibniz extension is well defined below level k + 2
  bool extends_truncated = false;    // and also respects truncation at level k
};

/// The same derivation test for concrete h', h''.
AppendixNumeric verify_appendix_formula(int k, const Mat2& h1, const Mat2& h2);

struct NkVerdict {
  bool pass = false;
  int depth = 0;
  std::string witness;
};

/// Recognizes a graded algebra as n_depth with e10 -> v1, e01 -> v2: layer
/// dims (2, 1, 2, 3, ...), generation by g_{-1}, and commuting ad_{v1}, ad_{v2}
/// on every layer of degree <= -2. Throws Error when v1, v2 are dependent.
NkVerdict verify_nk(const GradedLieAlgebra& symbol, const QVector& v1, const QVector& v2);

}  // namespace jetsym
