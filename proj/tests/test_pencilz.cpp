#include <memory>

#include "doctest.h"
#include "glab/lie_index.hpp"
#include "glab/pencil.hpp"
#include "glab/poisson.hpp"
#include "glab/polyspan.hpp"
#include "glab/quadratic.hpp"

using namespace glab;

namespace {

AlgebraPtr share(LieAlgebra q) { return std::make_shared<const LieAlgebra>(std::move(q)); }
UniPoly P(const std::string& s) { return parse_unipoly(s); }
constexpr int E = 0, H = 1, F = 2;
MPoly x(int i, int a = 0, Rational c = 1) { return MPoly::var(make_var(i, a), c); }

int expected_count(const std::vector<MPoly>& fs, int n) {
  int s = 0;
  for (const auto& f : fs) s += f.homogeneous_degree() * (n - 1) + 1;
  return s;
}

}  // namespace

TEST_CASE("pencil members") {
  auto q = share(make_sl(2));
  const Pencil pen = make_pencil(q, P("t^2"), P("t^2+1"));
  std::string w;
  CHECK(same_entries(pencil_member(pen, {1, 0}), make_quotient(q, P("t^2")), &w));
  CHECK(same_entries(pencil_member(pen, {frac(1, 2), frac(1, 2)}), make_quotient(q, P("t^2+1/2")), &w));
  CHECK(same_entries(pencil_member(pen, {1, -1}), make_difference_bracket(q, P("t^2"), P("t^2+1")), &w));
  CHECK(check_jacobi(pencil_member(pen, {3, -7})).ok);
  CHECK_THROWS(make_pencil(q, P("t^2"), P("t^2")));
  CHECK_THROWS(make_pencil(q, P("t^3"), P("t^3+t^2")));
  CHECK_THROWS(make_pencil(q, P("t^2"), P("t^3")));
  CHECK_THROWS(make_pencil(q, P("2t^2"), P("2t^2+1")));

  const PencilNormal nt = normalize_pencil(make_pencil(q, P("t^2"), P("t^2+2t+4")));
  CHECK(nt.l == "t");
  CHECK(nt.scale == 2);
  CHECK(nt.shift == 2);
  const PencilNormal n1 = normalize_pencil(pen);
  CHECK(n1.l == "1");
  CHECK(n1.scale == 1);
}

TEST_CASE("regular points") {
  auto q = share(make_sl(2));
  for (const auto& pen : {make_pencil(q, P("t^2"), P("t^2+t")), make_pencil(q, P("t^3"), P("t^3+1"))}) {
    CHECK(is_regular_point(pen, {1, 0}, 1));
    CHECK(is_regular_point(pen, {0, 1}, 1));
    CHECK(is_regular_point(pen, {2, -1}, 1));
    CHECK(!is_regular_point(pen, {1, -1}, 1));
  }
}

TEST_CASE("Pol(F) meets the centre in n dimensions") {
  auto q = share(make_sl(2));
  const MPoly c = casimir(*q);
  for (const char* s : {"t^2+t+1", "t^3+t+1", "t^2", "t^3-2"}) {
    const UniPoly p = P(s);
    const auto ker = pol_centre(c, q, p);
    CHECK(static_cast<int>(ker.size()) == p.degree());
  }
}

TEST_CASE("Z for sl2 pencils") {
  auto q = share(make_sl(2));
  const auto fs = basic_invariants(*q);
  struct Case {
    const char* p1;
    const char* p2;
    int trdeg;
  };
  for (const Case& cs : {Case{"t^2", "t^2+t", 3}, Case{"t^2", "t^2+1", 3}, Case{"t^3", "t^3+t", 5},
                         Case{"t^3", "t^3+1", 5}}) {
    const Pencil pen = make_pencil(q, P(cs.p1), P(cs.p2));
    const ZAlgebra z = build_Z(pen, fs);
    const int n = pen.n();
    CHECK(z.complete);
    CHECK(static_cast<int>(z.gens.entries.size()) == expected_count(fs, n));
    CHECK(z.bound == cs.trdeg);
    CHECK(verify_Z_commutes(z).ok);
    CHECK(trdeg_estimate(z.gens.polys(), Ambient{3, n}, 11).rank == static_cast<std::size_t>(cs.trdeg));
    for (const auto& g : z.gens.entries) CHECK(regenerate(g, fs, n) == g.poly);

    // negative control: e.1 f t does not commute
    auto gens = z.gens.polys();
    gens.back() = x(E) * x(F, 1);
    CHECK(!verify_commutes(gens, pen).ok);
  }
}

TEST_CASE("Z uses both generator routes") {
  auto q = share(make_sl(2));
  const ZAlgebra z = build_Z(make_pencil(q, P("t^3"), P("t^3+t")), basic_invariants(*q), 6);
  bool crt = false, linear = false;
  for (const auto& s : z.samples) {
    crt = crt || s.route == "crt";
    linear = linear || s.route == "linear";
  }
  CHECK(crt);
  CHECK(linear);
  // dimensions never decrease with more samples
  int prev = 0;
  for (int count = 1; count <= 6; ++count) {
    const ZAlgebra zc = build_Z(make_pencil(q, P("t^3"), P("t^3+t")), basic_invariants(*q), count);
    const int dim = static_cast<int>(zc.blocks[0].coords.size());
    CHECK(dim >= prev);
    CHECK(dim <= 5);
    prev = dim;
  }
  CHECK(prev == 5);
}

TEST_CASE("Z for sl3") {
  auto q = share(make_sl(3));
  const auto fs = basic_invariants(*q);
  const ZAlgebra z = build_Z(make_pencil(q, P("t^2"), P("t^2+t")), fs);
  CHECK(z.complete);
  CHECK(z.gens.entries.size() == 7);
  CHECK(z.bound == 7);
  CHECK(verify_Z_commutes(z).ok);
  CHECK(trdeg_estimate(z.gens.polys(), Ambient{8, 2}, 5).rank == 7);
}

TEST_CASE("transcendence degree estimate") {
  CHECK(trdeg_estimate({x(E), x(E) * x(E)}, Ambient{3, 1}, 1).rank == 1);
  CHECK(trdeg_estimate({x(E), x(F), x(E) * x(F)}, Ambient{3, 1}, 1).rank == 2);
}

TEST_CASE("tau images and psi_p") {
  const MPoly c = casimir(make_sl(2));
  CHECK(psi_p(f_at_t(c), P("t^3-1")) == polarize(c, {1, 1}, 3));
  for (const char* s : {"t^2-1", "t^3-1", "t^3+t+1", "t^4+2"}) {
    const UniPoly p = P(s);
    const int n = p.degree();
    CHECK(static_cast<int>(tilde_V_span(c, p, 2 * (n - 1) + n).size()) == 2 * (n - 1) + 1);
  }
  CHECK(tilde_V_span(c, P("t^2"), 6).size() <= 3);
}

TEST_CASE("psi_p(Z(q^,t)) against Z(p,p+t)") {
  auto q2 = share(make_sl(2));
  const auto f2 = basic_invariants(*q2);
  for (const char* s : {"t^2-1", "t^3+t+1", "t^3-1"}) {
    const SovpReport r = check_sovp(q2, f2, P(s));
    CHECK_MESSAGE(r.ok, s);
  }
  CHECK_THROWS_AS(check_sovp(q2, f2, P("t^3")), std::invalid_argument);
  auto q3 = share(make_sl(3));
  const SovpReport r3 = check_sovp(q3, basic_invariants(*q3), P("t^2-1"));
  CHECK(r3.ok);
  CHECK((r3.z_dims == std::vector<int>{3, 4}));
}

TEST_CASE("lowest components for gzu") {
  auto q = share(make_sl(2));
  const MPoly c = casimir(*q);
  const auto low = gzu_lowest(c, 4);
  CHECK(low[0].lowest == c);
  CHECK(in_span(low[1].lowest, {quad_H(*q, 0, 1)}));
  CHECK(!low[1].lowest.is_zero());
  for (const auto& e : low) {
    CHECK(e.lowest.homogeneous_degree() == 2);
    CHECK(t_component(e.lowest, e.k) == e.lowest);
    MPoly target = tau_apply(f_at_t(c), e.k);
    CHECK(in_span(e.lowest, {lower_t(target)}));
    CHECK(!e.lowest.is_zero());
  }
  // Psi(H[1,1]) lowest is H[0,0]; Psi(H[1,2] - H[1,1]) lowest is H[0,1]
  const UniPoly sh = UniPoly::t() + UniPoly(1);
  CHECK(t_component(substitute_t(quad_H(*q, 1, 1), sh, 4), 0) == quad_H(*q, 0, 0));
  const MPoly d = substitute_t(quad_H(*q, 1, 2) - quad_H(*q, 1, 1), sh, 4);
  CHECK(t_component(d, 0).is_zero());
  CHECK(t_component(d, 1) == quad_H(*q, 0, 1));

  for (const char* s : {"t^2-1", "t^3+t+1"}) {
    const SovpReport r = check_gzu(q, basic_invariants(*q), P(s));
    CHECK_MESSAGE(r.ok, s);
  }
  auto q3 = share(make_sl(3));
  CHECK(check_gzu(q3, basic_invariants(*q3), P("t^2-1")).ok);
}

TEST_CASE("Mishchenko-Fomenko image") {
  auto q = share(make_sl(2));
  const auto fs = basic_invariants(*q);
  const ZAlgebra z = build_Z(make_pencil(q, P("t^2"), P("t^2+t")), fs);
  const MFReport r = mf_image(z, QVector{0, 1, 0});
  CHECK(r.contains_mf);
  CHECK(r.mf_commutes);
  CHECK(r.image_rank == 3);
  const MFReport r0 = mf_image(z, QVector{0, 0, 0});
  CHECK(r0.contains_mf);
  // D_gamma of the Casimir at h* -> 1 is h
  CHECK(directional_derivative(casimir(*q), QVector{0, 1, 0}) == x(H));
  CHECK(directional_derivative(casimir(*q) * Rational(1, 2), QVector{0, 1, 0}) == x(H, 0, frac(1, 2)));

  auto q3 = share(make_sl(3));
  const ZAlgebra z3 = build_Z(make_pencil(q3, P("t^2"), P("t^2+t")), basic_invariants(*q3));
  const MFReport r3 = mf_image(z3, QVector{0, 0, 0, 1, 2, 0, 0, 0});
  CHECK(r3.contains_mf);
  CHECK(r3.mf_commutes);
  CHECK_THROWS(mf_image(build_Z(make_pencil(q, P("t^3"), P("t^3+t")), fs), QVector{0, 1, 0}));
}
