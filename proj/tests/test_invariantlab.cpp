#include <memory>

#include "doctest.h"
#include "glab/forms.hpp"
#include "glab/invariants.hpp"
#include "glab/lie_index.hpp"
#include "glab/poisson.hpp"
#include "glab/polyspan.hpp"
#include "glab/quadratic.hpp"

using namespace glab;

namespace {

AlgebraPtr share(LieAlgebra q) { return std::make_shared<const LieAlgebra>(std::move(q)); }
UniPoly P(const std::string& s) { return parse_unipoly(s); }
constexpr int E = 0, H = 1, F = 2;
MPoly x(int i, int a = 0, Rational c = 1) { return MPoly::var(make_var(i, a), c); }

bool central_for(const MPoly& g, const AlgebraPtr& q, const UniPoly& p) { return is_central(g, make_quotient(q, p)); }

}  // namespace

TEST_CASE("invariants by degree") {
  const LieAlgebra sl2 = make_sl(2), sl3 = make_sl(3);
  CHECK(invariants_degree(sl2, 1).elements.empty());
  CHECK(invariants_degree(sl2, 2).elements.size() == 1);
  CHECK(invariants_degree(sl2, 3).elements.empty());
  CHECK(invariants_degree(sl2, 4).elements.size() == 1);
  CHECK(invariants_degree(sl3, 2).elements.size() == 1);
  CHECK(invariants_degree(sl3, 3).elements.size() == 1);
  for (int d = 0; d <= 3; ++d)
    CHECK(static_cast<long>(invariants_degree(make_abelian(3), d).elements.size()) == binomial(3 + d - 1, d));
  for (const auto& f : invariants_degree(sl3, 3).elements) CHECK(is_invariant(f, sl3));
  CHECK_THROWS(invariants_degree(sl2, -1));
}

TEST_CASE("Casimir and characteristic polynomial invariants") {
  const LieAlgebra sl2 = make_sl(2);
  const MPoly c = casimir(sl2);
  CHECK(c == x(E) * x(F) * Rational(2) + x(H) * x(H) * Rational(1, 2));
  CHECK(is_invariant(c, sl2));
  CHECK(in_span(c, invariants_degree(sl2, 2).elements));
  const auto fs2 = basic_invariants(sl2);
  REQUIRE(fs2.size() == 1);
  CHECK(fs2[0] == c * Rational(-1, 2));

  const LieAlgebra sl3 = make_sl(3);
  const auto fs3 = basic_invariants(sl3);
  REQUIRE(fs3.size() == 2);
  CHECK(fs3[0].homogeneous_degree() == 2);
  CHECK(fs3[1].homogeneous_degree() == 3);
  CHECK(in_span(fs3[0], invariants_degree(sl3, 2).elements));
  CHECK(in_span(fs3[1], invariants_degree(sl3, 3).elements));
  CHECK(fs3[0] == casimir(sl3) * Rational(-1, 2));

  const auto fs4 = basic_invariants(make_sl(4));
  REQUIRE(fs4.size() == 3);
  CHECK(fs4[2].homogeneous_degree() == 4);
}

TEST_CASE("basic invariants by degree search") {
  const auto gl2 = basic_invariants(make_gl(2));
  REQUIRE(gl2.size() == 2);
  CHECK(gl2[0].homogeneous_degree() == 1);
  CHECK(gl2[1].homogeneous_degree() == 2);
  CHECK(basic_invariants(make_abelian(3)).size() == 3);
  const LieAlgebra tk = make_takiff(make_sl(2), 2);
  const auto ft = basic_invariants(tk);
  REQUIRE(ft.size() == 2);
  for (const auto& f : ft) {
    CHECK(f.homogeneous_degree() == 2);
    CHECK(is_invariant(f, tk));
  }
}

TEST_CASE("polarizations") {
  const LieAlgebra sl2 = make_sl(2);
  const MPoly c = casimir(sl2);
  CHECK(polarize(c, {0, 0}, 2) == c);
  CHECK(polarize(x(E) * x(F), {0, 1}, 2) == x(E) * x(F, 1) + x(E, 1) * x(F));
  CHECK(polarize(x(E) * x(E), {0, 1}, 2) == x(E) * x(E, 1) * Rational(2));
  CHECK_THROWS(polarize(x(E) * x(F) + x(H), {0, 1}, 2));
  CHECK_THROWS(polarize(c, {1, 0}, 2));
  CHECK_THROWS(polarize(c, {0, 2}, 2));

  const auto fs3 = basic_invariants(make_sl(3));
  for (int n = 2; n <= 3; ++n) {
    const auto ps = pol_space(fs3[1], n);
    CHECK(static_cast<long>(ps.size()) == binomial(3 + n - 1, 3));
    std::vector<MPoly> polys;
    MPoly sum;
    for (const auto& e : ps) {
      polys.push_back(e.poly);
      sum += e.poly;
    }
    CHECK(span_rank(polys) == ps.size());
    // sum over all indices is F evaluated at x + x t + ... + x t^{n-1}
    MPoly oracle = substitute(fs3[1], [&](Var v) {
      MPoly s;
      for (int a = 0; a < n; ++a) s += x(var_base(v), a);
      return s;
    });
    CHECK(sum == oracle);
  }
  CHECK((polarization_indices(2, 3) == std::vector<KVec>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));

  auto q = share(make_sl(2));
  const UniPoly p = P("t^3+t+1");
  const BracketTable t = make_quotient(q, p);
  for (const auto& e : pol_space(c, 3))
    for (int i = 0; i < 3; ++i) CHECK(poisson_bracket(e.poly, x(i), t).is_zero());
}

TEST_CASE("components F^[j]") {
  const MPoly c = casimir(make_sl(2));
  CHECK(f_bracket_j(c, 0, 3) == c);
  CHECK(f_bracket_j(c, 4, 3) == polarize(c, {2, 2}, 3));
  CHECK(f_bracket_j(c, 2, 3) == polarize(c, {0, 2}, 3) + polarize(c, {1, 1}, 3));
  CHECK(f_bracket_j(c, 1, 2) == x(E) * x(F, 1) * Rational(2) + x(E, 1) * x(F) * Rational(2) + x(H) * x(H, 1));
  CHECK_THROWS(f_bracket_j(c, 5, 3));
  CHECK_THROWS(f_bracket_j(c, -1, 3));
}

TEST_CASE("Takiff generators") {
  auto sl2 = share(make_sl(2));
  const auto fs = basic_invariants(*sl2);
  auto g2 = takiff_generators(*sl2, fs, 2);
  REQUIRE(g2.entries.size() == 2);
  CHECK(g2.entries[0].recipe.j == 1);
  CHECK(g2.entries[1].recipe.j == 2);
  CHECK(g2.entries[0].recipe.str() == "TAKIFF(0,1)");
  for (int n = 2; n <= 3; ++n) {
    auto gs = takiff_generators(*sl2, fs, n);
    CHECK(static_cast<int>(gs.entries.size()) == n);
    for (const auto& g : gs.entries) CHECK(central_for(g.poly, sl2, UniPoly::monomial(n)));
    CHECK(trdeg_estimate(gs.polys(), Ambient{3, n}, 3).rank == static_cast<std::size_t>(n));
  }
  auto sl3 = share(make_sl(3));
  auto g3 = takiff_generators(*sl3, basic_invariants(*sl3), 2);
  CHECK(g3.entries.size() == 4);
  for (const auto& g : g3.entries) CHECK(central_for(g.poly, sl3, P("t^2")));
}

TEST_CASE("CRT generators") {
  auto sl2 = share(make_sl(2));
  const MPoly c = casimir(*sl2);
  const UniPoly p = P("t^2-1");
  const auto rd = *rational_roots(p);
  auto gs = crt_generators(*sl2, {c}, p, rd);
  REQUIRE(gs.entries.size() == 2);
  bool found = false;
  for (const auto& g : gs.entries) {
    CHECK(central_for(g.poly, sl2, p));
    CHECK(g.recipe.kind == Recipe::Kind::Crt);
    if (g.recipe.root == 1) {
      found = true;
      MPoly oracle = substitute(c, [](Var v) { return x(var_base(v)) + x(var_base(v), 1); }) * Rational(1, 4);
      CHECK(g.poly == oracle);
      CHECK(g.recipe.str() == "CRT(1)");
    }
  }
  CHECK(found);

  for (const char* s : {"t^2*(t-1)", "t^3", "(t-1)^2*(t+2)", "t^3-t"}) {
    const UniPoly pm = P(s);
    auto gm = crt_generators(*sl2, basic_invariants(*sl2), pm, *rational_roots(pm));
    CHECK(gm.entries.size() == 3);
    for (const auto& g : gm.entries) {
      CHECK(!g.poly.is_zero());
      CHECK(central_for(g.poly, sl2, pm));
    }
    CHECK(trdeg_estimate(gm.polys(), Ambient{3, 3}, 5).rank == 3);
  }

  auto sl3 = share(make_sl(3));
  const UniPoly p3 = P("t^2-1");
  auto g3 = crt_generators(*sl3, basic_invariants(*sl3), p3, *rational_roots(p3));
  CHECK(g3.entries.size() == 4);
  for (const auto& g : g3.entries) CHECK(central_for(g.poly, sl3, p3));
}

TEST_CASE("quadratic and cubic families") {
  auto q = share(make_sl(2));
  const CurrentBracket br(q);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        CHECK(quad_X(*q, a, b, c) == -quad_X(*q, b, a, c));
        CHECK(quad_X(*q, a, b, c) == quad_X(*q, b, c, a));
      }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          const MPoly lhs = poisson_bracket(quad_H(*q, a, b), quad_H(*q, c, d), br);
          const MPoly rhs = quad_X(*q, b, d, a + c) + quad_X(*q, b, c, a + d) + quad_X(*q, a, d, b + c) +
                            quad_X(*q, a, c, b + d);
          CHECK(lhs == rhs);
        }
  CHECK(!quad_X(*q, 0, 1, 2).is_zero());
  CHECK(quad_X(*q, 1, 1, 2).is_zero());
  for (int i = 0; i < 3; ++i) {
    const SparseVec xi{{i, 1}};
    for (int a = 0; a <= 3; ++a) CHECK(y_xi(*q, xi, a, a).is_zero());
    CHECK(!y_xi(*q, xi, 0, 1).is_zero());
    // {H[a,b], xi t^c} = Y_xi[a+c, b] + Y_xi[b+c, a]
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        CHECK(poisson_bracket(quad_H(*q, a, b), x(i, 1), br) == y_xi(*q, xi, a + 1, b) + y_xi(*q, xi, b + 1, a));
  }
  CHECK(quad_h(*q, 2, 1, P("t^2-1")) == quad_H(*q, 0, 1));
  CHECK_THROWS(quad_H(make_sl(2), -1, 0));
  CHECK_THROWS(casimir(LieAlgebra("formless", {"a", "b"})));
}

TEST_CASE("Poisson centralisers of h and h[0,1]") {
  auto q = share(make_sl(2));
  for (int n = 2; n <= 4; ++n) CHECK(centralizer_dim_h(q, UniPoly::monomial(n)) == 2 * n - 1);
  for (const char* s : {"t^2-1", "t^3+t+1", "t^3-1", "t^4-2t+3"}) {
    const UniPoly p = P(s);
    CHECK(centralizer_dim_h(q, p) == 2 * p.degree() - 1);
    CHECK(centralizer_dim_h01(q, p) == 2 * p.degree() - 1);
  }
  for (int n = 2; n <= 3; ++n) {
    const PHCheck ph = lemma_ph_check(q, 2 * n);
    CHECK(ph.kernel_dim == 2 * n + 1);
    CHECK(ph.matches_tilde);
  }
}

TEST_CASE("Gaudin Hamiltonians") {
  const LieAlgebra sl2 = make_sl(2);
  const QVector z{1, 2, 5};
  const auto hs = gaudin_hamiltonians(sl2, z);
  REQUIRE(hs.size() == 3);
  MPoly sum;
  for (const auto& h : hs) sum += h;
  CHECK(sum.is_zero());
  auto sum3 = share(make_direct_power(sl2, 3));
  const BracketTable t = table_of(sum3);
  for (int k = 0; k < 3; ++k)
    for (int s = 0; s < 3; ++s) CHECK(poisson_bracket(hs[static_cast<std::size_t>(k)], hs[static_cast<std::size_t>(s)], t).is_zero());

  const auto h2 = gaudin_hamiltonians(sl2, QVector{3, 7});
  MPoly cross;
  const QMatrix& g = sl2.form_inverse();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (g(i, j) != 0) cross += x(i) * x(3 + j) * g(i, j);
  CHECK(h2[0] == cross * Rational(-1, 4));
  CHECK(h2[1] == -h2[0]);
  CHECK_THROWS(gaudin_hamiltonians(sl2, QVector{1, 2, 1}));

  const LieAlgebra sl3 = make_sl(3);
  const auto h3 = gaudin_hamiltonians(sl3, QVector{1, 2});
  const BracketTable t3 = table_of(share(make_direct_power(sl3, 2)));
  CHECK((h3[0] + h3[1]).is_zero());
  CHECK(poisson_bracket(h3[0], h3[1], t3).is_zero());
}

TEST_CASE("Gaudin identity through the CRT identification") {
  const LieAlgebra sl2 = make_sl(2);
  const UniPoly p = P("(t-1)(t-2)(t-3)");
  const auto rd = *rational_roots(p);
  const auto r = crt_idempotents(p, rd);
  QVector a, z;
  for (const auto& [root, m] : rd.roots) {
    a.push_back(root);
    z.push_back(1 / root);
  }
  const auto hs = gaudin_hamiltonians(sl2, z);
  MPoly rhs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    rhs -= transport_to_quotient(hs[k], 3, r, p) * (2 * a[k]);
    rhs += quad_h_res(sl2, r[k], r[k], p) * (a[k] * a[k]);
  }
  const MPoly h = quad_h(sl2, 1, 1, p);
  CHECK(h == rhs);

  MPoly expand;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t s = 0; s < a.size(); ++s) expand += quad_h_res(sl2, r[k], r[s], p) * (a[k] * a[s]);
  CHECK(h == expand);

  // transported Hamiltonians commute under the quotient bracket and centralise h
  auto q = share(sl2);
  const BracketTable t = make_quotient(q, p);
  for (std::size_t k = 0; k < 3; ++k) {
    const MPoly hk = transport_to_quotient(hs[k], 3, r, p);
    CHECK(poisson_bracket(hk, h, t).is_zero());
    CHECK(central_for(quad_h_res(sl2, r[k], r[k], p), q, p));
  }
}

TEST_CASE("the element X of z_p") {
  auto q = share(make_sl(2));
  CHECK(lemma_x_element(*q, P("t^3")) == quad_h(*q, 2, 2, P("t^3")) * Rational(1, 2));
  const MPoly x1 = lemma_x_element(*q, P("t^3-1"));
  CHECK(x1 - lemma_x_element(*q, P("t^3")) == quad_h(*q, 1, 0, P("t^3")));
  for (const char* s : {"t^3", "t^3-1", "t^3+t+1", "t^4-t^3+2t^2-t+5", "t^5+t^3-2t"}) {
    const UniPoly p = P(s);
    const MPoly xe = lemma_x_element(*q, p);
    CHECK(central_for(xe, q, p));
    CHECK(central_for(xe - quad_h(*q, 1, 1, p) * Rational(1, 2), q, p + UniPoly::t()));
  }
  CHECK_THROWS(lemma_x_element(*q, P("t^2-1")));
}

TEST_CASE("forms F[alpha,i,j]") {
  const LieAlgebra sl2 = make_sl(2);
  const MPoly c = casimir(sl2);
  int checked = 0;
  for (int m = 0; m <= 3; ++m)
    for (const auto& alpha : alpha_tuples(3, m))
      for (int i = 0; i <= m; ++i) {
        if (alpha[static_cast<std::size_t>(i)] == 0) continue;
        MPoly sum;
        for (int j = 0; j <= m; ++j) {
          const MPoly fij = script_f(sl2, c, alpha, i, j);
          CHECK(fij == -script_f(sl2, c, alpha, j, i));
          if (j != i) sum += fij;
        }
        CHECK(sum.is_zero());
        ++checked;
      }
  CHECK(checked > 10);
  const AlphaTuple a111{1, 1, 1};
  CHECK(m_tilde(a111) == 2);
  CHECK(script_f(sl2, c, a111, 0, 0).is_zero());
  std::vector<MPoly> span{script_f(sl2, c, a111, 0, 1), script_f(sl2, c, a111, 0, 2)};
  CHECK(span_rank(span) == 1);
  CHECK(script_f(sl2, c, {2, 0, 1}, 0, 1).is_zero());
  CHECK_THROWS(script_f(sl2, c, {1, 1}, 0, 1));

  // a non-invariant F does not satisfy the sum rule
  const MPoly y = x(E) * x(E);
  CHECK(!(script_f(sl2, y, a111, 0, 1) + script_f(sl2, y, a111, 0, 2)).is_zero());
}

TEST_CASE("bracket decomposition into forms") {
  auto q = share(make_sl(2));
  const MPoly ef = x(E) * x(F);
  for (const KVec& k : {KVec{0, 1}, KVec{1, 1}, KVec{1, 2}, KVec{0, 2}, KVec{2, 3}}) {
    const FFCheck r = ff_bracket_decomposition(q, ef, k);
    CHECK_MESSAGE(r.holds, "k = (", k[0], ",", k[1], ")");
  }
  for (const KVec& k : {KVec{0, 1}, KVec{1, 2}}) {
    CHECK(ff_bracket_decomposition(q, x(H) * x(H), k).holds);
    CHECK(ff_bracket_decomposition(q, x(E) * x(H), k).holds);
  }
  CHECK(ff_bracket_decomposition(q, x(E) * x(H) * x(F), {0, 1, 2}).holds);
  // multiset condition: {1,1,1} has only j = 2
  const auto terms = ff_bracket_terms({1, 1});
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].j == 2);
  CHECK((terms[0].alpha == AlphaTuple{0, 2, 1}));
  const auto t12 = ff_bracket_terms({1, 2});
  REQUIRE(t12.size() == 2);
  CHECK((t12[0].alpha == AlphaTuple{0, 1, 2}));
  CHECK((t12[1].alpha == AlphaTuple{0, 2, 0, 1}));
}

TEST_CASE("A matrices and the binomial identity") {
  CHECK(matrix_A(4) == QMatrix::from_rows({{4, 6, 3}, {1, 3, 2}, {0, 1, 1}}));
  for (int j = 4; j <= 12; ++j) CHECK(det(matrix_A(j)) == 1);
  for (int k = 1; k <= 8; ++k)
    for (int d = 1; d <= 8; ++d) CHECK(det(matrix_A_kd(k, d)) == 1);
  CHECK(matrix_A_kd(1, 2) == QMatrix::from_rows({{3, 2}, {1, 1}}));
  CHECK(matrix_A_kd(2, 1) == QMatrix::from_rows({{3, 3, 1}, {1, 2, 1}, {0, 1, 1}}));
  for (int u = 2; u <= 20; ++u)
    for (int b = 1; b < u; ++b) CHECK(binom_identity_check(u, b));
  CHECK_THROWS(matrix_A(3));
  CHECK_THROWS(binom_identity_check(3, 3));
}

TEST_CASE("generators for p = t^3 - c t") {
  const LieAlgebra sl2 = make_sl(2);
  for (const Rational& alpha : {Rational(2), Rational(-3), frac(1, 2)}) {
    const MinusTCheck r = example_minus_t(casimir(sl2), alpha);
    CHECK(r.root_zero);
    CHECK(r.other_roots);
  }
  const auto fs3 = basic_invariants(make_sl(3));
  const MinusTCheck r3 = example_minus_t(fs3[1], Rational(2));
  CHECK(r3.root_zero);
  CHECK(r3.other_roots);
}
