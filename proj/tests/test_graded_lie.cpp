#include <set>

#include "doctest.h"
#include "jetsym/graded_lie.hpp"

using namespace jetsym;

namespace {

GradedLieAlgebra heisenberg() {
  GradedLieAlgebra h({"x", "y", "z"}, {-1, -1, -2});
  h.set_bracket(0, 1, h.unit(2));
  return h;
}

// Oracle: re-derives the derivation identity for a prolongation element from
// the raw structure constants, resolving nested positive-degree values by
// recursion instead of reusing the solver's coordinate bookkeeping.
QVector eval_bracket_with_map(const TanakaResult& r, int layer_deg, const QVector& coeffs, std::size_t y) {
  // [phi, y] for phi = sum coeffs_c * basis_c of g_layer_deg
  const auto& m = r.base;
  const int t = layer_deg + m.degree(y);
  const std::size_t out_dim = t < 0 ? m.dim() : r.layers[static_cast<std::size_t>(t)].dim();
  QVector out(out_dim);
  const auto& basis = r.layers[static_cast<std::size_t>(layer_deg)].basis;
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t i = 0; i < out_dim; ++i) out[i] += coeffs[c] * basis[c].images[y][i];
  return out;
}

QVector bracket_value(const TanakaResult& r, const GradedMap& f, std::size_t x, std::size_t y) {
  // [f(x), y]
  const auto& m = r.base;
  const int t = m.degree(x) + f.degree;
  if (t < 0) return m.bracket(f.images[x], m.unit(y));
  return eval_bracket_with_map(r, t, f.images[x], y);
}

bool derivation_holds(const TanakaResult& r, const GradedMap& f) {
  const auto& m = r.base;
  for (std::size_t x = 0; x < m.dim(); ++x)
    for (std::size_t y = 0; y < m.dim(); ++y) {
      if (x == y) continue;
      const QVector& xy = m.bracket(x, y);
      const int t = m.degree(x) + m.degree(y) + f.degree;
      const std::size_t dim = t < 0 ? m.dim() : r.layers[static_cast<std::size_t>(t)].dim();
      QVector lhs(dim);
      for (std::size_t z = 0; z < m.dim(); ++z)
        for (std::size_t i = 0; i < dim; ++i) lhs[i] += xy[z] * f.images[z][i];
      const QVector a = bracket_value(r, f, x, y), b = bracket_value(r, f, y, x);
      for (std::size_t i = 0; i < dim; ++i)
        if (lhs[i] != a[i] - b[i]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("n_k layer dimensions") {
  for (int k = 2; k <= 7; ++k) {
    auto a = build_nk(k);
    auto dims = a.negative_layer_dims();
    REQUIRE(dims.size() == static_cast<std::size_t>(k));
    CHECK(dims[0] == 2);
    for (int m = 1; m <= k - 1; ++m) CHECK(dims[static_cast<std::size_t>(m)] == static_cast<std::size_t>(m));
    // total dim of n_{k'} with k' = k: 2 + (k-1)k/2
    CHECK(a.dim() == static_cast<std::size_t>(2 + (k - 1) * k / 2));
    CHECK(is_fundamental(a));
  }
  CHECK_THROWS_AS(build_nk(1), Error);
}

TEST_CASE("n_k relations and truncation coherence") {
  auto a = build_nk(5);
  auto i = [&](const char* l) { return *a.index_of(l); };
  CHECK(a.bracket(i("e10"), i("e01")) == a.unit(i("e11")));
  CHECK(a.bracket(i("e10"), i("e12")) == a.unit(i("e22")));
  CHECK(a.bracket(i("e01"), i("e21")) == a.unit(i("e22")));
  CHECK(a.bracket(i("e11"), i("e21")) == QVector(a.dim()));
  CHECK(a.bracket(i("e10"), i("e41")) == QVector(a.dim()));
  for (int k = 3; k <= 6; ++k) {
    auto big = build_nk(k), small = build_nk(k - 1);
    for (std::size_t x = 0; x < small.dim(); ++x)
      for (std::size_t y = 0; y < small.dim(); ++y) {
        if (small.degree(x) + small.degree(y) < -(k - 1)) continue;
        const QVector& s = small.bracket(x, y);
        const QVector& b = big.bracket(*big.index_of(small.label(x)), *big.index_of(small.label(y)));
        for (std::size_t t = 0; t < small.dim(); ++t) CHECK(s[t] == b[*big.index_of(small.label(t))]);
      }
  }
}

TEST_CASE("jacobi check") {
  CHECK_FALSE(jacobi_check(heisenberg()));
  for (int k = 2; k <= 6; ++k) CHECK_FALSE(jacobi_check(build_nk(k)));
  // corrupted constant: make [e10, e12] = 2 e22 breaks the relation identity
  auto a = build_nk(4);
  a.set_bracket(*a.index_of("e10"), *a.index_of("e12"), [&] {
    QVector v = a.unit(*a.index_of("e22"));
    v[*a.index_of("e22")] = 2;
    return v;
  }());
  auto w = jacobi_check(a);
  REQUIRE(w);
  std::set<std::string> labels;
  for (auto t : w->triple) labels.insert(a.label(t));
  CHECK(labels == std::set<std::string>{"e10", "e01", "e11"} );
}

TEST_CASE("tanaka prolongation of n_k") {
  for (int k = 3; k <= 6; ++k) {
    auto r = tanaka_prolong(build_nk(k), 3);
    CHECK(r.layer_dim(0) == 4);
    CHECK(r.layer_dim(1) == (k == 3 ? 2u : 0u));
    CHECK(r.proved_zero == (k >= 4));
    for (const auto& l : r.layers)
      for (const auto& f : l.basis) CHECK(derivation_holds(r, f));
  }
  auto g2 = tanaka_prolong(build_nk(3), 6);
  CHECK(g2.layer_dim(2) == 1);
  CHECK(g2.layer_dim(3) == 2);
  CHECK(g2.layer_dim(4) == 0);
  CHECK(g2.total_dim() == 14);
}

TEST_CASE("tanaka prolongation of the one-dimensional abelian algebra") {
  GradedLieAlgebra line({"x"}, {-1});
  auto r = tanaka_prolong(line, 4);
  CHECK_FALSE(r.proved_zero);
  // oracle: formal fields x^{d+1} d/dx, one per degree
  for (int d = 0; d <= 4; ++d) CHECK(r.layer_dim(d) == 1);
}

TEST_CASE("tanaka of the Heisenberg algebra is the contact algebra") {
  auto r = tanaka_prolong(heisenberg(), 3);
  // oracle: generating functions f(x, p, u) with weights 1, 1, 2; layer d is
  // spanned by monomials of weight d + 2
  for (int d = 0; d <= 3; ++d) {
    std::size_t count = 0;
    for (int u = 0; 2 * u <= d + 2; ++u) count += static_cast<std::size_t>(d + 2 - 2 * u + 1);
    CHECK(r.layer_dim(d) == count);
  }
}

TEST_CASE("tanaka rejects non-fundamental algebras") {
  GradedLieAlgebra a({"x", "z"}, {-1, -2});
  CHECK_THROWS_AS(tanaka_prolong(a, 1), Error);
}

TEST_CASE("appendix formulas") {
  for (int k = 4; k <= 6; ++k) {
    auto rep = verify_appendix_formula(k);
    CHECK(rep.constraints_ok);
    CHECK(rep.g0_formula_ok);
    CHECK(rep.g1_formula_ok);
    CHECK(rep.truncation_ok);
    CHECK(rep.residual_dim == 0);
    for (const auto& m : rep.mismatches) MESSAGE(m);
  }
  auto k3 = verify_appendix_formula(3);
  CHECK(k3.residual_dim == 2);
  CHECK(k3.truncation_ok);
}

TEST_CASE("appendix formulas numeric") {
  Mat2 zero{{{0, 0}, {0, 0}}};
  auto z = verify_appendix_formula(4, zero, zero);
  CHECK(z.extends_untruncated);
  CHECK(z.extends_truncated);
  // b' = a'' and c'' = d' satisfied but nonzero: extends on n_infinity, not on n_4
  Mat2 h1{{{1, 2}, {3, 5}}}, h2{{{2, 7}, {5, 11}}};
  auto ok = verify_appendix_formula(4, h1, h2);
  CHECK(ok.extends_untruncated);
  CHECK_FALSE(ok.extends_truncated);
  Mat2 bad{{{1, 3}, {3, 5}}};
  CHECK_FALSE(verify_appendix_formula(4, bad, h2).extends_untruncated);
}

TEST_CASE("verify_nk") {
  auto h = heisenberg();
  CHECK(verify_nk(h, h.unit(0), h.unit(1)).pass);
  auto n4 = build_nk(4);
  CHECK(verify_nk(n4, n4.unit(0), n4.unit(1)).pass);
  QVector v1 = n4.unit(0);
  v1[1] = 3;
  CHECK(verify_nk(n4, v1, n4.unit(1)).pass);
  CHECK_THROWS_AS(verify_nk(n4, n4.unit(0), n4.unit(0)), Error);
  // free nilpotent algebra of step 3 with (2,1,2) = n3; step 4 free is (2,1,2,3) = n4,
  // but a (2,1,2,2) quotient does not match
  GradedLieAlgebra q({"a", "b", "c", "d", "e", "f", "g"}, {-1, -1, -2, -3, -3, -4, -4});
  q.set_bracket(0, 1, q.unit(2));
  q.set_bracket(0, 2, q.unit(3));
  q.set_bracket(1, 2, q.unit(4));
  q.set_bracket(0, 3, q.unit(5));
  q.set_bracket(1, 4, q.unit(6));
  auto v = verify_nk(q, q.unit(0), q.unit(1));
  CHECK_FALSE(v.pass);
  CHECK(v.witness.find("dim g_-4") != std::string::npos);
}
