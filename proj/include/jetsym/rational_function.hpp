#pragma once

#include <span>
#include <string>
#include <vector>

#include "jetsym/polynomial.hpp"

namespace jetsym {

/// Quotient of polynomials kept in lowest terms with a monic denominator.
class RationalFunction {
public:
  RationalFunction() : den_(nullptr, 1) {}
  explicit RationalFunction(VarList vars);
  RationalFunction(VarList vars, Rational c);
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  /// Normalizes num/den; throws DivisionByZero when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(const VarList& vars, const std::string& name);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarList& vars() const { return num_.vars() ? num_.vars() : den_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  bool is_one() const { return is_constant() && constant_value() == 1; }
  /// Rough size used to prefer simple pivots.
  std::size_t complexity() const { return num_.size() + den_.size() - 1; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(unsigned e) const;
  RationalFunction derivative(std::size_t var) const;
  /// Throws Error naming the variable when it is not declared.
  RationalFunction derivative(const std::string& name) const;
  /// Throws DivisionByZero when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;
  /// Simultaneous substitution of every variable by images[i].
  RationalFunction compose(std::span<const RationalFunction> images, const VarList& target) const;
  RationalFunction rebase(const VarList& target) const;

  std::string to_string() const;

private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Builds num/den in canonical form; the same as the two-argument constructor.
RationalFunction normalize(const Polynomial& num, const Polynomial& den);

/// Substitutes named variables; unnamed ones are kept. Result stays on p's variables.
RationalFunction substitute(const RationalFunction& p,
                            const std::vector<std::pair<std::string, RationalFunction>>& bindings);

}  // namespace jetsym
