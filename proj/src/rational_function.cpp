#include "jetsym/rational_function.hpp"

#include <algorithm>

namespace jetsym {

RationalFunction::RationalFunction(VarList vars) : num_(vars), den_(vars, 1) {}

RationalFunction::RationalFunction(VarList vars, Rational c) : num_(vars, std::move(c)), den_(vars, 1) {}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.vars(), 1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable(const VarList& vars, const std::string& name) {
  return RationalFunction(Polynomial::variable(vars, name));
}

RationalFunction normalize(const Polynomial& num, const Polynomial& den) { return {num, den}; }

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.vars() ? num_.vars() : den_.vars(), 1);
    if (!num_.vars()) num_ = Polynomial(den_.vars());
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1) {
      num_ *= 1 / c;
      den_ = Polynomial(den_.vars() ? den_.vars() : num_.vars(), 1);
    }
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ *= 1 / lc;
    den_ *= 1 / lc;
  }
}

Rational RationalFunction::constant_value() const { return num_.constant_value() / den_.constant_value(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  // a/b + c/d with g = gcd(b,d): (a*(d/g) + c*(b/g)) / (b*(d/g))
  Polynomial g = gcd(den_, o.den_);
  Polynomial bd = *divide_exact(den_, g), dd = *divide_exact(o.den_, g);
  num_ = num_ * dd + o.num_ * bd;
  den_ = den_ * dd;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction(vars() ? vars() : o.vars());
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    if (!den_.vars() && o.den_.vars()) den_ = Polynomial(o.den_.vars(), 1);
    return *this;
  }
  // cross-cancel before multiplying
  Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Polynomial a = *divide_exact(num_, g1), d = *divide_exact(o.den_, g1);
  Polynomial c = *divide_exact(o.num_, g2), b = *divide_exact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ *= 1 / lc;
    den_ *= 1 / lc;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  RationalFunction inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  Rational lc = inv.den_.leading_coeff();
  if (lc != 1) {
    inv.num_ *= 1 / lc;
    inv.den_ *= 1 / lc;
  }
  return *this *= inv;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  if (!r.num_.vars()) r.num_ = Polynomial(vars(), r.num_.constant_value());
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) {
    RationalFunction r;
    r.num_ = num_.derivative(var);
    r.den_ = den_;
    return r;
  }
  // (a/b)' = (a' b - a b') / b^2
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RationalFunction RationalFunction::derivative(const std::string& name) const {
  const VarList& v = vars();
  if (!v) throw Error("unknown variable '" + name + "'");
  auto it = std::find(v->begin(), v->end(), name);
  if (it == v->end()) throw Error("unknown variable '" + name + "'");
  return derivative(static_cast<std::size_t>(it - v->begin()));
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.is_constant() ? den_.constant_value() : den_.evaluate(point);
  if (sgn(d) == 0) throw DivisionByZero("denominator " + den_.to_string() + " vanishes at the evaluation point");
  Rational n = num_.is_constant() ? num_.constant_value() : num_.evaluate(point);
  return n / d;
}

RationalFunction RationalFunction::compose(std::span<const RationalFunction> images, const VarList& target) const {
  if (is_zero()) return RationalFunction(target);
  if (is_constant()) return RationalFunction(target, constant_value());
  // Put all images over one common denominator D; then a(x/D) = A / D^deg a.
  bool polynomial_images = true;
  for (const auto& im : images)
    if (!im.is_polynomial()) polynomial_images = false;
  if (polynomial_images) {
    std::vector<Polynomial> ims;
    ims.reserve(images.size());
    for (const auto& im : images) ims.push_back(im.num_.vars() ? im.num_ * (1 / im.den_.constant_value())
                                                              : Polynomial(target, im.constant_value()));
    Polynomial n = num_.compose(ims, target);
    Polynomial d = den_.is_constant() ? Polynomial(target, den_.constant_value()) : den_.compose(ims, target);
    if (d.is_zero())
      throw DivisionByZero("substitution makes denominator " + den_.to_string() + " vanish identically");
    return RationalFunction(n, d);
  }
  // General case: evaluate term by term with rational arithmetic.
  auto eval = [&](const Polynomial& p) {
    RationalFunction acc(target);
    std::vector<std::vector<RationalFunction>> powers(images.size());
    for (const auto& t : p.terms()) {
      RationalFunction v(target, t.coeff);
      for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (!t.exponents[i]) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(RationalFunction(target, 1));
        while (pw.size() <= t.exponents[i]) pw.push_back(pw.back() * images[i]);
        v *= pw[t.exponents[i]];
      }
      acc += v;
    }
    return acc;
  };
  RationalFunction d = eval(den_);
  if (d.is_zero())
    throw DivisionByZero("substitution makes denominator " + den_.to_string() + " vanish identically");
  return eval(num_) / d;
}

RationalFunction RationalFunction::rebase(const VarList& target) const {
  RationalFunction r;
  r.num_ = num_.vars() ? num_.rebase(target) : Polynomial(target, num_.constant_value());
  r.den_ = den_.vars() ? den_.rebase(target) : Polynomial(target, den_.constant_value());
  if (!den_.is_constant()) r.normalize();  // grlex order may change under reordering
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c == 1) return num_.to_string();
  }
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    return p.size() > 1 || s.find_first_of("*^") != std::string::npos || s.find('/') != std::string::npos
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction substitute(const RationalFunction& p,
                            const std::vector<std::pair<std::string, RationalFunction>>& bindings) {
  const VarList& vars = p.vars();
  if (!vars) return p;
  std::vector<RationalFunction> images;
  images.reserve(vars->size());
  for (std::size_t i = 0; i < vars->size(); ++i) images.push_back(RationalFunction(Polynomial::variable(vars, i)));
  for (const auto& [name, value] : bindings) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end()) throw Error("unknown variable '" + name + "'");
    images[static_cast<std::size_t>(it - vars->begin())] =
        value.vars() ? value : RationalFunction(vars, value.constant_value());
  }
  return p.compose(images, vars);
}

}  // namespace jetsym
