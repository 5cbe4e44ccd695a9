#include "jetsym/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace jetsym {

VarList make_varlist(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Exponent>(a[i] + b[i]);
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Exponent>(a[i] - b[i]);
  return r;
}

// Sorts decreasing and merges equal monomials, dropping zeros.
void sort_and_merge(std::vector<Term>& terms) {
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exponents, y.exponents); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms = std::move(out);
}

// Merge of two sorted term lists: a + sign*b.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exponents, b[j].exponents))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exponents, a[i].exponents)) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Small deterministic generator for internal specializations.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long small() { return static_cast<long>(next() % 61) - 30; }
};

using Univariate = std::vector<Rational>;  // index = degree

void trim(Univariate& u) {
  while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
}

// Degree of gcd of two univariate polynomials over Q.
int univariate_gcd_degree(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

}  // namespace

Polynomial::Polynomial(VarList vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VarList vars, Rational c) : vars_(std::move(vars)) {
  c.canonicalize();
  if (sgn(c) != 0) terms_.push_back(Term{Monomial(nvars(), 0), std::move(c)});
}

Polynomial::Polynomial(VarList vars, std::vector<Term> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  canonicalize();
}

Polynomial Polynomial::variable(const VarList& vars, std::size_t index) {
  Monomial m(vars->size(), 0);
  m.at(index) = 1;
  return monomial(vars, std::move(m), 1);
}

Polynomial Polynomial::variable(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw Error("unknown variable '" + name + "'");
  return variable(vars, static_cast<std::size_t>(it - vars->begin()));
}

Polynomial Polynomial::monomial(const VarList& vars, Monomial exps, Rational c) {
  Polynomial p(vars);
  c.canonicalize();
  if (sgn(c) != 0) p.terms_.push_back(Term{std::move(exps), std::move(c)});
  return p;
}

void Polynomial::canonicalize() { sort_and_merge(terms_); }

void Polynomial::adopt_vars(const Polynomial& o) {
  if (same_vars(vars_, o.vars_)) return;
  if (!o.vars_) {
    if (!o.is_constant()) throw ChartMismatch("polynomial without variables must be constant");
    return;
  }
  if (!vars_) {
    if (!is_constant()) throw ChartMismatch("polynomial without variables must be constant");
    Rational c = constant_value();
    vars_ = o.vars_;
    terms_.clear();
    if (sgn(c) != 0) terms_.push_back(Term{Monomial(nvars(), 0), c});
    return;
  }
  throw ChartMismatch("polynomials over different variable lists");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return total_degree(last.exponents) == 0 ? last.coeff : Rational(0);
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.front().exponents);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exponents[var]);
  return d;
}

bool Polynomial::depends_on(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exponents[var] != 0) return true;
  return false;
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) s[i] = true;
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  adopt_vars(o);
  if (o.terms_.empty()) return *this;
  if (!o.vars_ && vars_) return *this += Polynomial(vars_, o.constant_value());
  terms_ = merge_add(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  adopt_vars(o);
  if (o.terms_.empty()) return *this;
  if (!o.vars_ && vars_) return *this -= Polynomial(vars_, o.constant_value());
  terms_ = merge_add(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z = a.vars_ ? Polynomial(a.vars_) : Polynomial(b.vars_);
    if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_))
      throw ChartMismatch("polynomials over different variable lists");
    return z;
  }
  if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_))
    throw ChartMismatch("polynomials over different variable lists");
  if (!a.vars_) return b * a.constant_value();
  if (!b.vars_) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  if (b.is_constant()) return a * b.constant_value();
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      out.push_back(Term{mono_mul(x.exponents, y.exponents), x.coeff * y.coeff});
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // multiplication by a monomial preserves the order
    Polynomial r(a.vars_);
    r.terms_ = std::move(out);
    return r;
  }
  return Polynomial(a.vars_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = c;
  k.canonicalize();
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (a.terms_[i].exponents.size() != b.terms_[i].exponents.size()) {
      // one side lacks variables; only constants can match
      if (total_degree(a.terms_[i].exponents) || total_degree(b.terms_[i].exponents)) return false;
    } else if (a.terms_[i].exponents != b.terms_[i].exponents) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coeff *= t.exponents[var];
    d.exponents[var] -= 1;
    r.terms_.push_back(std::move(d));
  }
  // lowering the same exponent in every surviving term preserves grlex order
  return r;
}

Polynomial Polynomial::derivative(const std::string& name) const {
  if (!vars_) return Polynomial(vars_);
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) throw Error("unknown variable '" + name + "'");
  return derivative(static_cast<std::size_t>(it - vars_->begin()));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw Error("evaluation point has wrong dimension");
  Rational sum = 0;
  std::vector<std::vector<Rational>> powers(nvars());
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      const Exponent e = t.exponents[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images, const VarList& target) const {
  if (images.size() != nvars()) throw Error("composition needs one image per variable");
  Polynomial result(target);
  std::vector<std::vector<Polynomial>> powers(nvars());
  std::vector<Term> acc;
  bool all_monomial = true;
  for (const auto& img : images)
    if (img.terms_.size() > 1) all_monomial = false;
  for (const auto& t : terms_) {
    Polynomial v(target, t.coeff);
    for (std::size_t i = 0; i < t.exponents.size() && !v.is_zero(); ++i) {
      const Exponent e = t.exponents[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v *= pw[e];
    }
    if (v.is_zero()) continue;
    if (all_monomial) {
      for (auto& term : v.terms_) acc.push_back(std::move(term));
    } else {
      result += v;
    }
  }
  if (all_monomial) return Polynomial(target, std::move(acc));
  return result;
}

std::vector<Polynomial> Polynomial::collect(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    const Exponent e = c.exponents[var];
    c.exponents[var] = 0;
    buckets[e].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial p(vars_);
    p.terms_ = std::move(b);  // same shift within a bucket keeps the order
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial Polynomial::rebase(const VarList& target) const {
  if (same_vars(vars_, target)) {
    Polynomial r = *this;
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it == target->end()) {
      if (depends_on(i)) throw ChartMismatch("variable '" + (*vars_)[i] + "' missing from target chart");
      map[i] = SIZE_MAX;
    } else {
      map[i] = static_cast<std::size_t>(it - target->begin());
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size(), 0);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.exponents[i]) m[map[i]] = t.exponents[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool constant = total_degree(t.exponents) == 0;
    bool need_star = false;
    if (constant || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (!t.exponents[i]) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (t.exponents[i] > 1) os << "^" << t.exponents[i];
      need_star = true;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (auto e : t.exponents) h = h * 31 + e;
    h ^= std::hash<std::string>{}(t.coeff.get_str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const VarList& vars = a.vars() ? a.vars() : b.vars();
  if (a.is_zero()) return Polynomial(vars);
  if (b.is_constant()) return a * (1 / b.constant_value());
  if (a.degree() < b.degree()) return std::nullopt;
  const Term& lb = b.leading_term();
  Polynomial r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!divides(lb.exponents, lr.exponents)) return std::nullopt;
    Term t{mono_div(lr.exponents, lb.exponents), lr.coeff / lb.coeff};
    r -= Polynomial::monomial(vars, t.exponents, t.coeff) * b;
    q.push_back(std::move(t));
  }
  return Polynomial(vars, std::move(q));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Polynomial lcb = b.collect(var).back();
  Polynomial r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    Polynomial lcr = r.collect(var).back();
    Monomial shift(r.nvars(), 0);
    shift[var] = static_cast<Exponent>(dr - db);
    r = lcb * r - lcr * Polynomial::monomial(r.vars(), shift, 1) * b;
  }
  return r;
}

namespace {

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  auto coeffs = p.collect(var);
  Polynomial g(p.vars());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return Polynomial(p.vars(), 1);
  }
  return g;
}

// gcd of b with the monomial m (coefficient ignored)
Polynomial monomial_gcd(const Term& m, const Polynomial& p) {
  Monomial g = m.exponents;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t.exponents[i]);
  return Polynomial::monomial(p.vars(), std::move(g), 1);
}

Univariate specialize(const Polynomial& p, std::size_t var, const std::vector<Rational>& values) {
  Univariate u(p.degree_in(var) + 1);
  std::vector<std::vector<Rational>> powers(p.nvars());
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (i == var || !t.exponents[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= t.exponents[i]) pw.push_back(pw.back() * values[i]);
      v *= pw[t.exponents[i]];
    }
    u[t.exponents[var]] += v;
  }
  return u;
}

// True when a specialization proves that the gcd has degree 0 in var.
bool coprime_in(const Polynomial& a, const Polynomial& b, std::size_t var, SplitMix& rng) {
  const unsigned da = a.degree_in(var), db = b.degree_in(var);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> values(a.nvars());
    for (auto& v : values) v = rng.small();
    Univariate ua = specialize(a, var, values), ub = specialize(b, var, values);
    if (ua.size() != da + 1 || sgn(ua.back()) == 0) continue;
    if (ub.size() != db + 1 || sgn(ub.back()) == 0) continue;
    return univariate_gcd_degree(std::move(ua), std::move(ub)) == 0;
  }
  return false;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  const VarList& vars = a.vars() ? a.vars() : b.vars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(vars, 1);
  if (a.is_monomial()) return monomial_gcd(a.leading_term(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading_term(), a);
  if (a == b) return a.monic();

  const auto sa = a.support(), sb = b.support();
  std::vector<std::size_t> common;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i] && sb[i]) common.push_back(i);
  if (common.empty()) return Polynomial(vars, 1);

  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.degree() <= large.degree()) {
    if (divide_exact(large, small)) return small.monic();
  }

  SplitMix rng{a.hash() ^ (b.hash() << 1)};
  std::vector<std::size_t> undecided;
  for (auto v : common)
    if (!coprime_in(a, b, v, rng)) undecided.push_back(v);
  if (undecided.empty()) return Polynomial(vars, 1);

  // Recursive primitive PRS in the undecided variable of lowest degree.
  std::size_t var = undecided.front();
  unsigned best = ~0u;
  for (auto v : undecided) {
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }
  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial c = gcd_impl(ca, cb);
  Polynomial pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  Polynomial g(vars, 1);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial(vars, 1);
      break;
    }
    r = *divide_exact(r, content_in(r, var));
    pa = std::move(pb);
    pb = std::move(r);
  }
  if (!g.is_constant()) g = *divide_exact(g, content_in(g, var));
  return (c * g).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.vars() && b.vars() && !same_vars(a.vars(), b.vars()))
    throw ChartMismatch("gcd of polynomials over different variable lists");
  return gcd_impl(a, b);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace jetsym
