#include <memory>
#include <random>

#include "doctest.h"
#include "glab/bracket_table.hpp"
#include "glab/lie_index.hpp"
#include "glab/unipoly.hpp"

using namespace glab;

namespace {

AlgebraPtr share(LieAlgebra q) { return std::make_shared<const LieAlgebra>(std::move(q)); }

UniPoly P(const std::string& s) { return parse_unipoly(s); }

LinComb lc(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  LinComb out;
  for (const auto& [i, a, c] : terms) out.emplace_back(make_var(i, a), c);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

constexpr int E = 0, H = 1, F = 2;

}  // namespace

TEST_CASE("sl2 presentation") {
  LieAlgebra q = make_sl(2);
  CHECK(q.dim() == 3);
  CHECK(q.labels() == std::vector<std::string>{"e", "h", "f"});
  CHECK(q.bracket(H, E) == SparseVec{{E, 2}});
  CHECK(q.bracket(H, F) == SparseVec{{F, -2}});
  CHECK(q.bracket(E, F) == SparseVec{{H, 1}});
  REQUIRE(q.form());
  CHECK(*q.form() == QMatrix::from_rows({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}}));
}

TEST_CASE("sl_n structure constants match matrix commutators") {
  for (int n : {2, 3, 4}) {
    LieAlgebra q = make_sl(n);
    auto mats = sl_basis_matrices(n);
    CHECK(q.dim() == n * n - 1);
    for (int i = 0; i < q.dim(); ++i)
      for (int j = 0; j < q.dim(); ++j) {
        QMatrix expect = mats[i] * mats[j];
        QMatrix ba = mats[j] * mats[i];
        QMatrix got(n, n);
        for (std::size_t r = 0; r < expect.rows(); ++r)
          for (std::size_t c = 0; c < expect.cols(); ++c) expect(r, c) -= ba(r, c);
        for (const auto& [k, c] : q.bracket(i, j))
          for (std::size_t r = 0; r < got.rows(); ++r)
            for (std::size_t s = 0; s < got.cols(); ++s) got(r, s) += c * mats[k](r, s);
        CHECK(got == expect);
      }
  }
}

TEST_CASE("builtin algebras are Lie algebras with invariant forms") {
  std::vector<LieAlgebra> qs = {make_sl(2), make_sl(3), make_gl(2), make_abelian(3),
                                make_direct_sum(make_sl(2), make_sl(2)), make_takiff(make_sl(2), 3),
                                make_takiff(make_takiff(make_sl(2), 2), 2), make_direct_power(make_sl(2), 3)};
  for (const auto& q : qs) {
    CAPTURE(q.name());
    CHECK(check_antisymmetry(q).ok);
    CHECK(check_jacobi(q).ok);
    REQUIRE(q.has_form());
    CHECK(check_form_invariant(q).ok);
  }
  CHECK(make_abelian(4).dim() == 4);
  LieAlgebra s = make_direct_sum(make_sl(2), make_sl(2));
  CHECK(s.dim() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) CHECK(s.bracket(i, j).empty());
}

TEST_CASE("takiff algebras") {
  LieAlgebra sl2 = make_sl(2);
  LieAlgebra t1 = make_takiff(sl2, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t1.bracket(i, j) == sl2.bracket(i, j));
  LieAlgebra t2 = make_takiff(sl2, 2);
  CHECK(t2.dim() == 6);
  CHECK(t2.bracket(3 + E, 3 + F).empty());
  CHECK(t2.bracket(E, 3 + F) == SparseVec{{3 + H, 1}});
  CHECK(make_takiff(t2, 2).label(10) == "h.t1.t1");
}

TEST_CASE("change of basis and orthogonal bases") {
  LieAlgebra sl2 = make_sl(2);
  QMatrix p = orthogonal_basis(*sl2.form());
  QMatrix g = p * (*sl2.form()) * p.transpose();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(g(i, j) == 0);
  LieAlgebra q = change_basis(sl2, p, {"u1", "u2", "u3"});
  CHECK(check_jacobi(q).ok);
  CHECK(check_form_invariant(q).ok);
}

TEST_CASE("univariate polynomials") {
  CHECK(poly_rem(P("t^3"), P("t^2-1")) == P("t"));
  CHECK(poly_rem(P("t^2"), P("t^2")).is_zero());
  CHECK(poly_rem(P("t^4"), P("t^3-t")) == P("t^2"));
  CHECK(P("(t-1)(t-2)(t-3)") == P("t^3 - 6t^2 + 11t - 6"));
  CHECK(P("1/2 t^2 + t").coeff(2) == Rational(1, 2));
  CHECK(P("t^3+t+1").str() == "t^3 + t + 1");
  CHECK_THROWS(P("t^"));
  CHECK(has_distinct_roots(P("t^2-1")));
  CHECK(!has_distinct_roots(P("t^2")));
  CHECK(has_distinct_roots(P("t^3-t")));
  auto rd = rational_roots(P("t^3-t"));
  REQUIRE(rd);
  CHECK(rd->roots.size() == 3);
  CHECK(!rational_roots(P("t^2+1")));
  auto rd2 = rational_roots(P("t^2(t-1)"));
  REQUIRE(rd2);
  CHECK(rd2->roots == std::vector<std::pair<Rational, int>>{{0, 2}, {1, 1}});
}

TEST_CASE("crt idempotents") {
  RootData rd{{{1, 1}, {-1, 1}}};
  auto r = crt_idempotents(P("t^2-1"), rd);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == P("1/2 t + 1/2"));
  CHECK(r[1] == P("1/2 - 1/2 t"));
  RootData rd2{{{1, 1}, {0, 1}}};
  auto r2 = crt_idempotents(P("t^2-t"), rd2);
  CHECK(r2[0] == P("t"));
  CHECK(r2[1] == P("1-t"));
  for (const char* ps : {"t^2-1", "t^2-t", "t^3-t", "(t-1)(t-2)(t-3)"}) {
    UniPoly p = P(ps);
    auto roots = rational_roots(p);
    REQUIRE(roots);
    auto rs = crt_idempotents(p, *roots);
    UniPoly sum;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      sum += rs[i];
      for (std::size_t j = 0; j < rs.size(); ++j)
        CHECK(poly_rem(rs[i] * rs[j], p) == (i == j ? rs[i] : UniPoly()));
    }
    CHECK(poly_rem(sum, p) == UniPoly(1));
  }
  for (const char* ps : {"t^2-1", "t^2-t", "t^3-t"}) {
    UniPoly p = P(ps);
    CHECK(check_crt_isomorphism(std::make_shared<const LieAlgebra>(make_sl(2)), p, *rational_roots(p)).ok);
    CHECK(check_crt_isomorphism(std::make_shared<const LieAlgebra>(make_sl(3)), p, *rational_roots(p)).ok);
  }
  CHECK_THROWS(crt_idempotents(P("t^2"), RootData{{{0, 2}}}));
  CHECK_THROWS(crt_idempotents(P("t^2-1"), RootData{{{1, 1}, {2, 1}}}));
}

TEST_CASE("crt primary components") {
  UniPoly p = P("t^2(t-1)");
  auto pr = crt_primary(p, RootData{{{0, 2}, {1, 1}}});
  REQUIRE(pr.size() == 2);
  // r_(0,0) = 1 - r_(1) where r_(1) = t^2 is the idempotent at 1
  CHECK(pr[1].r0 == P("t^2"));
  CHECK(pr[0].r0 == P("1 - t^2"));
  for (const auto& c : pr) {
    CHECK(poly_rem(c.r0 * c.r0, p) == c.r0);
    CHECK(poly_rem(c.r0 * c.r1, p) == c.r1);
    CHECK(poly_rem(c.r1.pow(c.multiplicity), p).is_zero());
  }
  auto whole = crt_primary(P("(t-2)^3"), RootData{{{2, 3}}});
  CHECK(whole[0].r0 == UniPoly(1));
  CHECK(whole[0].r1 == P("t-2"));
}

TEST_CASE("quotient brackets") {
  auto sl2 = share(make_sl(2));
  auto et = make_var(E, 1), ft = make_var(F, 1);
  CHECK(make_quotient(sl2, P("t^2-1")).bracket(et, ft) == lc({{H, 0, 1}}));
  CHECK(make_quotient(sl2, P("t^2")).bracket(et, ft).empty());
  CHECK(make_quotient(sl2, P("t^2-t")).bracket(et, ft) == lc({{H, 1, 1}}));
  // t^n agrees with the Takiff algebra
  auto tk = share(make_takiff(*sl2, 3));
  BracketTable q3 = make_quotient(sl2, P("t^3"));
  BracketTable tk1 = table_of(tk);
  for (int u = 0; u < 9; ++u)
    for (int v = 0; v < 9; ++v) {
      LinComb a = q3.entry(u, v);
      LinComb b;
      for (const auto& [w, c] : tk1.entry(u, v)) b.emplace_back(var_of_flat(var_base(w), 3), c);
      std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      CHECK(a == b);
    }
  LieAlgebra w = make_quotient(sl2, P("t^3-t")).to_algebra("W");
  CHECK(check_jacobi(w).ok);
}

TEST_CASE("difference bracket") {
  auto sl2 = share(make_sl(2));
  BracketTable d = make_difference_bracket(sl2, P("t^2-1"), P("t^2"));
  CHECK(d.bracket(make_var(E, 1), make_var(F, 1)) == lc({{H, 0, 1}}));
  CHECK(d.bracket(make_var(E, 0), make_var(F, 1)).empty());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d.bracket(make_var(i, 0), make_var(j, 0)).empty());
  BracketTable d2 = make_difference_bracket(sl2, P("t^2-t"), P("t^2"));
  CHECK(d2.bracket(make_var(E, 1), make_var(F, 1)) == lc({{H, 1, 1}}));
  CHECK(check_jacobi(d).ok);
  CHECK(check_jacobi(make_difference_bracket(sl2, P("t^3-t+1"), P("t^3+1"))).ok);
  CHECK_THROWS(make_difference_bracket(sl2, P("t^3"), P("t^3+t^2")));
  CHECK_THROWS(make_difference_bracket(sl2, P("t^3"), P("t^3")));
  CHECK_THROWS(make_difference_bracket(sl2, P("t^3"), P("t^2")));
}

TEST_CASE("pencil closure") {
  auto sl3 = share(make_sl(3));
  UniPoly p1 = P("t^2-1"), p2 = P("t^2+t");
  BracketTable t1 = make_quotient(sl3, p1), t2 = make_quotient(sl3, p2);
  for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{2, -1}, {Rational(1, 3), Rational(2, 3)}, {5, 7}}) {
    BracketTable c = combine(a, t1, b, t2);
    CHECK(check_jacobi(c).ok);
    if (a + b == 1) {
      CHECK(same_entries(c, make_quotient(sl3, a * p1 + b * p2)));
      REQUIRE(c.p());
      CHECK(*c.p() == a * p1 + b * p2);
    }
  }
}

TEST_CASE("contractions") {
  auto sl2 = share(make_sl(2));
  BracketTable t = make_quotient(sl2, P("t^2-1"));
  BracketTable c = contract_phi_s(t, 3);
  CHECK(c.bracket(make_var(E, 1), make_var(F, 1)) == lc({{H, 0, 9}}));
  CHECK(check_jacobi(c).ok);
  // conjugated table is the quotient by s^{-n} p(s t)
  CHECK(same_entries(c, make_quotient(sl2, P("t^2 - 9"))));
  CHECK(same_entries(contraction_limit(t), make_quotient(sl2, P("t^2"))));
  CHECK(same_entries(contraction_limit(make_quotient(sl2, P("t^3+t+1"))), make_quotient(sl2, P("t^3"))));
  CHECK_THROWS(contract_phi_s(t, 0));
  CHECK(lie_index(c, 1).index == lie_index(t, 1).index);
}

TEST_CASE("index") {
  auto sl2 = share(make_sl(2));
  CHECK(lie_index(sl2, 11).index == 1);
  CHECK(lie_index(share(make_sl(3)), 11).index == 2);
  CHECK(lie_index(share(make_abelian(3)), 11).index == 3);
  CHECK(lie_index(share(make_takiff(*sl2, 3)), 11).index == 3);
  for (const char* p : {"t^3", "t^3-t", "t^3+t+1"}) CHECK(lie_index(make_quotient(sl2, P(p)), 5).index == 3);
  CHECK(lie_index(make_difference_bracket(sl2, P("t^2-1"), P("t^2")), 5).index == 4);
  CHECK(lie_index(make_difference_bracket(sl2, P("t^3-1"), P("t^3")), 5).index == 5);
  auto r = lie_index(sl2, 11);
  CHECK(r.search.witness.size() == 3);
  CHECK(bound_b(3, 1, 2).bn == 3);
  CHECK(bound_b(8, 2, 2).bn == 7);
}
