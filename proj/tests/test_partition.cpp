#include "doctest.h"
#include "spp/errors.hpp"
#include "spp/index_set.hpp"
#include "spp/partition.hpp"
#include "support.hpp"

#include <set>

using namespace spp;
using spp::testing::draw;
using spp::testing::every_partition;

TEST_CASE("partitions validate and canonicalize their blocks") {
  Partition a(3, {{3, 1}, {2}});
  CHECK(a.block(0) == std::vector<std::size_t>{1, 3});
  CHECK(a == Partition(3, {{1, 3}, {2}}));
  CHECK(a.part_of(3) == 0);
  CHECK(a.part_of(2) == 1);
  CHECK(Partition(2, {{}, {1, 2}}).block(0).empty());
  CHECK_THROWS_AS(Partition(3, {{1}, {2}}), DimensionError);
  CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), DimensionError);
  CHECK_THROWS_AS(Partition(2, {{1}, {4}}), DimensionError);
  CHECK(Partition::from_assignment({1, 0, 1}, 2) == Partition(3, {{2}, {1, 3}}));
}

TEST_CASE("shape_of examples") {
  CHECK(shape_of(Partition(3, {{1, 2, 3}, {}})).counts == std::vector<std::size_t>{3, 0});
  CHECK(shape_of(Partition(3, {{1, 3}, {2}})).counts == std::vector<std::size_t>{2, 1});
  CHECK(shape_of(Partition(3, {{2}, {1}, {3}})).counts == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("partition_matrix examples") {
  CHECK(partition_matrix(Matrix::identity(2), Partition(2, {{1}, {2}})) == Matrix::identity(2));
  CHECK(partition_matrix(Matrix::identity(2), Partition(2, {{1, 2}, {}})) == Matrix{{1, 0}, {1, 0}});
  CHECK(partition_matrix(Matrix{{1, 2, 3}}, Partition(3, {{1, 3}, {2}})) == Matrix{{4, 2}});
  CHECK_THROWS_AS(partition_matrix(Matrix{{1, 2}}, Partition(3, {{1, 3}, {2}})), DimensionError);
}

TEST_CASE("lift examples") {
  CHECK(lift(Matrix{{5, 6}}) == Matrix{{5, 6}, {1, 2}});
  CHECK(lift(Matrix(0, 3)) == Matrix{{1, 2, 3}});
  const Rational a(2, 7), b(-3);
  CHECK(lift(Matrix{{a}, {b}}) == Matrix{{a}, {b}, {1}});
}

TEST_CASE("shape_member examples") {
  CHECK(shape_member(ShapeFamily::all(3, 2), Shape{{2, 1}}));
  CHECK_FALSE(shape_member(ShapeFamily::bounds(3, 2, {1, 1}, {2, 2}), Shape{{3, 0}}));
  CHECK(shape_member(ShapeFamily::explicit_list(3, 3, {Shape{{1, 1, 1}}}), Shape{{1, 1, 1}}));
  CHECK_THROWS_AS(ShapeFamily::all(3, 2).contains(Shape{{1, 1, 1}}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::all(3, 2).contains(Shape{{1, 1}}), DimensionError);
}

TEST_CASE("shape family construction rejects empty families") {
  CHECK_THROWS_AS(ShapeFamily::explicit_list(3, 2, {}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::explicit_list(3, 2, {Shape{{2, 2}}}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::bounds(3, 2, {2, 2}, {3, 3}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::bounds(3, 2, {0, 0}, {1, 1}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::bounds(3, 2, {2, 0}, {1, 3}), DimensionError);
  CHECK_THROWS_AS(ShapeFamily::bounds(3, 2, {0}, {3}), DimensionError);
}

TEST_CASE("enumerate_shapes examples") {
  auto counts = [](const std::vector<Shape>& shapes) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : shapes) out.push_back(s.counts);
    return out;
  };
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(counts(enumerate_shapes(ShapeFamily::all(2, 2))) == V{{0, 2}, {1, 1}, {2, 0}});
  CHECK(counts(enumerate_shapes(ShapeFamily::explicit_list(2, 2, {Shape{{1, 1}}}))) == V{{1, 1}});
  CHECK(counts(enumerate_shapes(ShapeFamily::bounds(3, 2, {1, 1}, {2, 2}))) == V{{1, 2}, {2, 1}});
  auto odd_first = ShapeFamily::predicate(4, 2, [](const Shape& s) { return s.counts[0] % 2 == 1; });
  CHECK(counts(enumerate_shapes(odd_first)) == V{{1, 3}, {3, 1}});
}

TEST_CASE("enumerate_shapes is exactly the member set") {
  std::mt19937_64 rng(21);
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t p = 1; p <= 4; ++p) {
      std::vector<std::size_t> lower(p), upper(p);
      std::size_t lo_sum = 0, hi_sum = 0;
      do {
        lo_sum = hi_sum = 0;
        for (std::size_t j = 0; j < p; ++j) {
          lower[j] = draw(rng, 0, 2);
          upper[j] = lower[j] + draw(rng, 0, static_cast<long>(n));
          lo_sum += lower[j];
          hi_sum += upper[j];
        }
      } while (lo_sum > n || hi_sum < n);
      for (const auto& family : {ShapeFamily::all(n, p), ShapeFamily::bounds(n, p, lower, upper)}) {
        std::set<Shape> accepted;
        for (const auto& partition : every_partition(n, p)) {
          Shape s = shape_of(partition);
          CHECK(s.total() == n);
          if (family.contains(s)) accepted.insert(s);
        }
        const std::vector<Shape> listed = enumerate_shapes(family);
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        CHECK(std::set<Shape>(listed.begin(), listed.end()) == accepted);
        CHECK(listed.size() == accepted.size());
      }
    }
}

TEST_CASE("part sums conserve the total column sum") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = draw(rng, 1, 3), n = draw(rng, 1, 5), p = draw(rng, 1, 3);
    Matrix a = spp::testing::random_rational_matrix(rng, k, n);
    for (const auto& partition : every_partition(n, p)) {
      Matrix x = partition_matrix(a, partition);
      REQUIRE(x.rows() == k);
      REQUIRE(x.cols() == p);
      for (std::size_t r = 0; r < k; ++r) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t j = 0; j < p; ++j) lhs += x(r, j);
        for (std::size_t i = 0; i < n; ++i) rhs += a(r, i);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("lift keeps the rows and separates duplicate columns") {
  Matrix a{{1, 1, 1}, {2, 2, 2}};
  Matrix l = lift(a);
  REQUIRE(l.rows() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(l(0, c) == a(0, c));
    CHECK(l(1, c) == a(1, c));
    CHECK(l(2, c) == static_cast<long>(c + 1));
  }
  std::set<std::vector<Rational>> distinct;
  for (std::size_t c = 0; c < 3; ++c) distinct.insert(l.column(c));
  CHECK(distinct.size() == 3);
}

TEST_CASE("index sets") {
  IndexSet s(70);
  s.insert(1);
  s.insert(65);
  s.insert(70);
  CHECK(s.count() == 3);
  CHECK(s.contains(65));
  CHECK_FALSE(s.contains(64));
  CHECK(s.elements() == std::vector<std::size_t>{1, 65, 70});
  IndexSet t = IndexSet::full(70);
  t &= s;
  CHECK(t == s);
  CHECK(covers({IndexSet::full(4)}, 4));
  IndexSet half(4);
  half.insert(1);
  half.insert(2);
  CHECK_FALSE(covers({half}, 4));
}
