#include "doctest.h"
#include "glab/io.hpp"
#include "glab/quadratic.hpp"

using namespace glab;

namespace {

constexpr int E = 0, H = 1, F = 2;
MPoly x(int i, int a = 0, Rational c = 1) { return MPoly::var(make_var(i, a), c); }

}  // namespace

TEST_CASE("rational and polynomial JSON") {
  CHECK(rational_json(frac(-3, 2)) == "-3/2");
  CHECK(rational_from_json(Json("6/4")) == frac(3, 2));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);

  const LieAlgebra sl2 = make_sl(2);
  const MPoly f = x(E) * x(F) * 2 + x(H, 0, frac(1, 2)) * x(H) + x(E, 2) * x(E, 2) * x(H, 1);
  const Json j = poly_json(f, sl2);
  CHECK(poly_from_json(j, sl2) == f);
  CHECK(poly_json(casimir(sl2), sl2).dump() == poly_json(casimir(sl2), sl2).dump());
  bool saw_square = false;
  for (const auto& term : j)
    for (const auto& fac : term["monomial"])
      if (fac[0] == "e" && fac[1] == 2) saw_square = fac[2] == 2;
  CHECK(saw_square);
  CHECK(poly_str(x(E) * x(F, 1) * 3 - x(H) * x(H), sl2).find("(f t)") != std::string::npos);
  CHECK(poly_str(MPoly(), sl2) == "0");
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff":"1","monomial":[["q",0,1]]}])"), sl2), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"coeff":"1"})"), sl2), InputError);
}

TEST_CASE("algebra spec JSON") {
  for (const char* name : {"sl2", "sl3", "gl2", "abelian:3", "takiff:sl2:2", "sum:sl2,abelian:1"}) {
    const LieAlgebra q = parse_algebra(name);
    const LieAlgebra r = algebra_from_json(algebra_json(q));
    REQUIRE(r.dim() == q.dim());
    CHECK(r.labels() == q.labels());
    for (int i = 0; i < q.dim(); ++i)
      for (int k = 0; k < q.dim(); ++k) CHECK(r.bracket(i, k) == q.bracket(i, k));
    CHECK(r.has_form() == q.has_form());
    if (q.has_form()) CHECK(*r.form() == *q.form());
  }
  CHECK(parse_algebra("sl4").dim() == 15);
  CHECK(parse_algebra("power:sl2:3").dim() == 9);

  const Json heis = Json::parse(R"({"dim":3,"basis":["p","q","z"],"sc":[[0,1,2,"1"]]})");
  const LieAlgebra hq = algebra_from_json(heis);
  CHECK(hq.bracket(1, 0) == SparseVec{{2, Rational(-1)}});
  // reversed index order gives the opposite sign
  const LieAlgebra hr = algebra_from_json(Json::parse(R"({"dim":3,"basis":["p","q","z"],"sc":[[1,0,2,"-1"]]})"));
  CHECK(hr.bracket(0, 1) == hq.bracket(0, 1));

  CHECK_THROWS_AS(parse_algebra("so3"), InputError);
  CHECK_THROWS_AS(parse_algebra("sl1"), InputError);
  CHECK_THROWS_AS(parse_algebra("abelian:0"), InputError);
  CHECK_THROWS_AS(parse_algebra("takiff:sl2"), InputError);
  // Jacobi fails: [a,b]=c, [b,c]=c, [a,c]=a
  CHECK_THROWS_AS(algebra_from_json(Json::parse(
                      R"({"dim":3,"basis":["a","b","c"],"sc":[[0,1,2,"1"],[1,2,2,"1"],[0,2,0,"1"]]})")),
                  InputError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":2,"basis":["a"]})")), InputError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim":1,"basis":["a"],"form":[["0"]]})")), InputError);
  // abelian form: any symmetric nondegenerate matrix is invariant
  CHECK(algebra_from_json(Json::parse(R"({"dim":2,"basis":["a","b"],"form":[["0","1"],["1","0"]]})")).has_form());
  // not invariant on sl2: the identity matrix
  Json bad = algebra_json(make_sl(2));
  bad["form"] = Json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])");
  CHECK_THROWS_AS(algebra_from_json(bad), InputError);
}

TEST_CASE("polynomial input") {
  CHECK(parse_poly_input("t^3-t").p == UniPoly::from_roots({{0, 1}, {1, 1}, {-1, 1}}));
  const PolyInput r = parse_poly_input(R"({"roots": [["1", 2], ["-1/2", 1]]})");
  REQUIRE(r.roots.has_value());
  CHECK(r.p.degree() == 3);
  CHECK(r.p.eval(frac(-1, 2)) == 0);
  CHECK(parse_poly_input(R"({"coeffs": ["-1", "0", "1"]})").p == parse_unipoly("t^2-1"));
  CHECK_FALSE(parse_poly_input(R"({"coeffs": ["-1", "0", "1"]})").roots.has_value());
  CHECK(unipoly_json(parse_unipoly("t^2-1")) == Json::parse(R"({"coeffs": ["-1", "0", "1"]})"));
  CHECK_THROWS_AS(parse_poly_input("2t^2"), InputError);
  CHECK_THROWS_AS(parse_poly_input("1"), InputError);
  CHECK_THROWS_AS(parse_poly_input("t^2+"), InputError);
  CHECK_THROWS_AS(parse_poly_input(R"({"roots": [["1", 0]]})"), InputError);
  CHECK_THROWS_AS(parse_poly_input("{nope"), InputError);
  CHECK(parse_rational_list("1,2,-5/3") == QVector{1, 2, frac(-5, 3)});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), InputError);
}

TEST_CASE("recipe and generator JSON") {
  Recipe a;
  a.kind = Recipe::Kind::Takiff;
  a.root = frac(1, 2);
  a.j = 3;
  Recipe b;
  b.kind = Recipe::Kind::Polar;
  b.coeffs = {1, frac(-2, 3)};
  for (const Recipe& r : {a, b}) CHECK(recipe_from_json(recipe_json(r)).str() == r.str());
  CHECK_THROWS_AS(recipe_from_json(Json::parse(R"({"kind":"MAGIC"})")), InputError);

  const LieAlgebra sl2 = make_sl(2);
  GeneratorSet g;
  g.entries.push_back({casimir(sl2), 0, a});
  g.entries.push_back({x(E, 1) * x(F), 1, b});
  const GeneratorSet back = generators_from_json(generators_json(g, sl2), sl2);
  REQUIRE(back.entries.size() == 2);
  CHECK(back.entries[0].poly == g.entries[0].poly);
  CHECK(back.entries[1].source == 1);
  CHECK(back.entries[1].recipe.str() == b.str());
}
