#include <random>

#include "doctest.h"
#include "glab/qmatrix.hpp"
#include "glab/rational.hpp"
#include "oracle.hpp"

using namespace glab;

TEST_CASE("rational serialization") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("-6/14") == Rational(-3, 7));
  CHECK(parse_rational("\xE2\x88\x92" "3/7") == Rational(-3, 7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 6) == 0);
}

TEST_CASE("rank small cases") {
  CHECK(rank(QMatrix::identity(3)) == 3);
  CHECK(rank(QMatrix(3, 4)) == 0);
  // pi(gamma) of sl2 at e* -> 1 in basis (e,h,f): [e,h] = -2e, [h,e] = 2e
  QMatrix pi = QMatrix::from_rows({{0, -2, 0}, {2, 0, 0}, {0, 0, 0}});
  CHECK(rank(pi) == 2);
}

TEST_CASE("nullspace conventions") {
  CHECK(nullspace(QMatrix::identity(4)).empty());
  auto ns = nullspace(QMatrix::from_rows({{1, -1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == QVector{1, 1});
  auto ns2 = nullspace(QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}));
  REQUIRE(ns2.size() == 2);
  CHECK(ns2[0] == QVector{-2, 1, 0});
  CHECK(ns2[1] == QVector{-3, 0, 1});
}

TEST_CASE("determinants") {
  CHECK(det(QMatrix::from_rows({{4, 3}, {1, 1}})) == 1);
  CHECK(det(QMatrix::identity(5)) == 1);
  CHECK(det(QMatrix::from_rows({{4, 6, 3}, {1, 3, 2}, {0, 1, 1}})) == 1);
  CHECK(det(QMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(QMatrix::from_rows({{Rational(1, 2), 0}, {0, Rational(2, 3)}})) == Rational(1, 3));
  CHECK_THROWS(det(QMatrix(2, 3)));
}

TEST_CASE("odd antisymmetric determinant vanishes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix a = oracle::random_matrix(rng, 5, 5, 9);
    QMatrix s(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) s(i, j) = a(i, j) - a(j, i);
    CHECK(det(s) == 0);
  }
}

TEST_CASE("fraction-free elimination agrees with naive elimination") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    QMatrix m = oracle::random_matrix(rng, r, c, 5, trial % 3);
    if (trial % 5 == 0 && r > 1)  // force dependent rows
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1 % r, j);
    std::size_t nr = 0;
    Rational nd;
    QMatrix expect = oracle::naive_rref(m, &nr, &nd);
    CHECK(rank(m) == nr);
    CHECK(rref(m) == expect);
    if (r == c) CHECK(det(m) == nd);
    auto ns = nullspace(m);
    CHECK(ns.size() == c - nr);
    for (const auto& v : ns) {
      QVector z = m * v;
      for (const auto& x : z) CHECK(x == 0);
    }
    // rank-nullity on the transpose
    CHECK(rank(m) == r - nullspace(m.transpose()).size());
  }
}

TEST_CASE("solve and inverse") {
  QMatrix a = QMatrix::from_rows({{2, 1}, {1, 3}});
  auto x = solve(a, {3, 5});
  REQUIRE(x);
  CHECK(*x == QVector{Rational(4, 5), Rational(7, 5)});
  CHECK(!solve(QMatrix::from_rows({{1, 1}, {1, 1}}), {1, 2}));
  QMatrix inv = inverse(a);
  CHECK(a * inv == QMatrix::identity(2));
  CHECK_THROWS(inverse(QMatrix::from_rows({{1, 2}, {2, 4}})));
}
