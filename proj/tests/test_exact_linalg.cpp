#include "doctest.h"

#include "nilmetriq/linalg.hpp"
#include "nilmetriq/sampling.hpp"
#include "nilmetriq/surd.hpp"

using namespace nilmetriq;

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational::parse("+5/1").str() == "5");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2/"), std::invalid_argument);
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rref pivots") {
  auto id = rref(RatMatrix::identity(3));
  CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1, 2});
  CHECK(rref(RatMatrix(2, 2)).pivot_columns.empty());
  RatMatrix m{{1, 2}, {2, 4}};
  auto r = rref(m);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.matrix == RatMatrix{{1, 2}, {0, 0}});
  CHECK(rank(m) == 1);
}

TEST_CASE("rref with a custom column order") {
  RatMatrix m{{1, 1, 0}, {0, 2, 1}};
  std::vector<std::size_t> order{2, 1, 0};
  auto r = rref(m, order);
  CHECK(r.pivot_columns == std::vector<std::size_t>{2, 1});
  // Hand elimination: pivot on column 2 then column 1.
  CHECK(r.matrix == RatMatrix{{-2, 0, 1}, {1, 1, 0}});
  CHECK(rref(r.matrix, order).matrix == r.matrix);
  std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS(rref(m, bad));
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RatMatrix::identity(6)).empty());
  CHECK(kernel_basis(RatMatrix(1, 6)).size() == 6);

  // Build a rank-4 matrix with known kernel: rows orthogonal to k1, k2.
  RatVector k1{1, 0, -1, 2, 0, 1}, k2{0, 1, 1, 0, -1, Rational(1, 2)};
  Sampler s(11);
  std::vector<RatVector> rows;
  while (rows.size() < 6) {
    RatVector r(6);
    for (auto& x : r) x = s.rational();
    // Project r so that r.k1 = r.k2 = 0 by adjusting coordinates 0 and 1.
    r[0] -= dot(r, k1);
    r[1] -= dot(r, k2);
    rows.push_back(r);
  }
  RatMatrix m = RatMatrix::from_rows(rows);
  REQUIRE(m * k1 == RatVector(6));
  REQUIRE(m * k2 == RatVector(6));
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 6 - rank(m));
  for (const auto& v : ker) CHECK(is_zero(m * v));
  CHECK(in_span(ker, k1));
  CHECK(in_span(ker, k2));
}

TEST_CASE("solve, inverse, determinant, definiteness") {
  RatMatrix a{{2, 1}, {1, 1}};
  CHECK(determinant(a) == Rational(1));
  CHECK(*inverse(a) == RatMatrix{{1, -1}, {-1, 2}});
  CHECK(is_positive_definite(a));
  CHECK_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  auto x = solve(a, {3, 2});
  REQUIRE(x);
  CHECK(*x == RatVector{1, 1});
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, {1, 2}).has_value());
  CHECK_FALSE(inverse(RatMatrix{{1, 1}, {1, 1}}).has_value());
}

TEST_CASE("exp of nilpotent matrices") {
  CHECK(exp_nilpotent(RatMatrix(6, 6)) == RatMatrix::identity(6));
  CHECK(exp_nilpotent(RatMatrix::unit(6, 1, 0)) == RatMatrix::identity(6) + RatMatrix::unit(6, 1, 0));

  RatMatrix n(6, 6);
  for (std::size_t i = 1; i < 6; ++i) n(i, i - 1) = 1;
  RatMatrix e = exp_nilpotent(n);
  // Series oracle: (n^k)(i,j) = [i - j == k], so exp(n)(i,j) = 1/(i-j)!.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(e(i, j) == (i >= j ? inverse(factorial(static_cast<unsigned>(i - j))) : Rational(0)));
  CHECK(e * exp_nilpotent(-n) == RatMatrix::identity(6));
  CHECK_THROWS_AS(exp_nilpotent(RatMatrix::identity(6)), std::invalid_argument);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
  Sampler s(2024);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = 1 + s.index(7), cols = 1 + s.index(7);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (s.coin(0.6)) m(i, j) = s.rational();
    CHECK(rank(m) + kernel_basis(m).size() == cols);
    std::vector<std::size_t> order(cols);
    for (std::size_t j = 0; j < cols; ++j) order[j] = cols - 1 - j;
    auto r = rref(m, order);
    CHECK(rref(r.matrix, order).matrix == r.matrix);
  }
}

TEST_CASE("quadratic surds") {
  QuadraticSurd x(1, 1, 3), y(1, -1, 3);
  CHECK(x * y == QuadraticSurd::rational(-2, 3));
  CHECK((x + y) == QuadraticSurd::rational(2, 3));
  CHECK_THROWS(QuadraticSurd(1, 1, 4));
}
