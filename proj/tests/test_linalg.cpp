#include "doctest.h"
#include "spp/errors.hpp"
#include "spp/matrix.hpp"
#include "spp/rational.hpp"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace spp;
using spp::testing::draw;

namespace {

// Leibniz expansion; exponential but independent of elimination.
Rational leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("parse_rational reads integers, decimals and fractions exactly") {
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("2E2") == 200);
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.8") == Rational(4, 5));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("09/010") == Rational(9, 10));
  CHECK(parse_rational("0.09e1") == Rational(9, 10));
  CHECK(parse_rational("000") == 0);
  CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rationals print reduced with the sign on the numerator") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(Integer(1), Integer(-3))) == "-1/3");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(power(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(power(Rational(5), 0) == 1);
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::identity(2)) == 1);
  CHECK(determinant(Matrix{{1, 1}, {1, 2}}) == 1);
  CHECK(determinant(Matrix{{1, 2, 1}, {3, 4, 3}, {5, 6, 5}}) == 0);
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix{{1, 2, 3}, {4, 5, 6}}) == 2);
}

TEST_CASE("solve_linear examples") {
  const std::vector<Rational> b1{3, 5};
  LinearSolution s1 = solve_linear(Matrix::identity(2), b1);
  REQUIRE(s1.has_solution());
  CHECK(s1.x == b1);

  const std::vector<Rational> b2{2, 5};
  LinearSolution s2 = solve_linear(Matrix{{1, 0}, {1, 1}}, b2);
  REQUIRE(s2.has_solution());
  CHECK(s2.x == std::vector<Rational>{2, 3});

  const std::vector<Rational> b3{1, 1};
  CHECK(solve_linear(Matrix{{1, 1}, {2, 2}}, b3).status == LinearSolution::Status::singular);

  CHECK_THROWS_AS(solve_linear(Matrix::identity(2), std::vector<Rational>{1, 2, 3}), DimensionError);
}

TEST_CASE("solve_linear on tall systems") {
  // (1,1,2) = 1*(1,0,1) + 1*(0,1,1)
  const Matrix tall{{1, 0}, {0, 1}, {1, 1}};
  LinearSolution ok = solve_linear(tall, std::vector<Rational>{1, 1, 2});
  REQUIRE(ok.has_solution());
  CHECK(ok.x == std::vector<Rational>{1, 1});
  CHECK(solve_linear(tall, std::vector<Rational>{1, 1, 3}).status == LinearSolution::Status::inconsistent);
  CHECK(solve_linear(Matrix{{1, 2}, {2, 4}, {3, 6}}, std::vector<Rational>{1, 2, 3}).status ==
        LinearSolution::Status::singular);
}

TEST_CASE("solve_vandermonde examples") {
  CHECK(solve_vandermonde(std::vector<Rational>{5, 5, 5}) == std::vector<Rational>{5, 0, 0});
  CHECK(solve_vandermonde(std::vector<Rational>{0, 1, 2}) == std::vector<Rational>{0, 1, 0});
  CHECK(solve_vandermonde(std::vector<Rational>{1, 2, 5}) == std::vector<Rational>{1, 0, 1});
  CHECK(solve_vandermonde(std::vector<Rational>{7}) == std::vector<Rational>{7});
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m = spp::testing::random_rational_matrix(rng, n, n);
    CHECK(determinant(m) == leibniz(m));
  }
}

TEST_CASE("determinant is alternating under row swaps") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = spp::testing::random_rational_matrix(rng, 4, 4);
    const std::size_t a = draw(rng, 0, 3), b = (a + 1 + draw(rng, 0, 2)) % 4;
    Matrix swapped = m;
    for (std::size_t c = 0; c < 4; ++c) std::swap(swapped(a, c), swapped(b, c));
    CHECK(determinant(swapped) == -determinant(m));
  }
}

TEST_CASE("vandermonde coefficients re-evaluate to the node values") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = trial % 6;
    std::vector<Rational> values(d + 1);
    for (auto& v : values) v = Rational(draw(rng, -20, 20), draw(rng, 1, 7));
    const std::vector<Rational> c = solve_vandermonde(values);
    REQUIRE(c.size() == d + 1);
    for (std::size_t e = 0; e <= d; ++e) {
      Rational at = 0, x = 1;
      for (std::size_t j = 0; j <= d; ++j) {
        at += c[j] * x;
        x *= static_cast<long>(e);
      }
      CHECK(at == values[e]);
    }
  }
}

TEST_CASE("solve_linear inverts a nonsingular product") {
  std::mt19937_64 rng(14);
  int solved = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m = spp::testing::random_rational_matrix(rng, n, n);
    if (determinant(m) == 0) continue;
    std::vector<Rational> x(n);
    for (auto& v : x) v = Rational(draw(rng, -9, 9), draw(rng, 1, 5));
    const std::vector<Rational> b = m * x;
    LinearSolution sol = solve_linear(m, b);
    REQUIRE(sol.has_solution());
    CHECK(sol.x == x);
    ++solved;
  }
  CHECK(solved > 40);
}

TEST_CASE("rank equals the rank of the transpose") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + draw(rng, 0, 4), cols = 1 + draw(rng, 0, 4);
    // Small entry range makes rank deficiency common.
    Matrix m = spp::testing::random_matrix(rng, rows, cols, -1, 1);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) <= std::min(rows, cols));
  }
}
