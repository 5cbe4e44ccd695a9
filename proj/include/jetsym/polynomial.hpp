#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/rational.hpp"

namespace jetsym {

/// Ordered variable names shared by every polynomial over the same chart.
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_varlist(std::vector<std::string> names);

/// True when two variable lists denote the same ordered coordinates.
bool same_vars(const VarList& a, const VarList& b);

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order; returns true when a is strictly greater than b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial exponents;
  Rational coeff;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so equal polynomials have identical term lists. A
/// default-constructed polynomial has no variable list; such values may only
/// be constants and adopt the variable list of whatever they are combined with.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(VarList vars);
  Polynomial(VarList vars, Rational c);
  Polynomial(VarList vars, std::vector<Term> terms);  // canonicalizes

  static Polynomial variable(const VarList& vars, std::size_t index);
  static Polynomial variable(const VarList& vars, const std::string& name);
  static Polynomial monomial(const VarList& vars, Monomial exps, Rational c);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value; meaningful when is_constant().
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  unsigned degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  std::vector<bool> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(const std::string& name) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable i by images[i]; all images share one target var list.
  Polynomial compose(std::span<const Polynomial> images, const VarList& target) const;
  /// Writes the polynomial as sum_d coeffs[d] * x_var^d, coeffs free of x_var.
  std::vector<Polynomial> collect(std::size_t var) const;
  /// Re-expresses this polynomial over a larger or reordered var list.
  Polynomial rebase(const VarList& target) const;

  std::string to_string() const;
  std::size_t hash() const;

private:
  void canonicalize();
  void adopt_vars(const Polynomial& o);

  VarList vars_;
  std::vector<Term> terms_;
};

/// Quotient when b divides a exactly, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to variable var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

}  // namespace jetsym
