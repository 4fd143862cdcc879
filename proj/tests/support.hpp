#pragma once

#include "spp/convexity.hpp"
#include "spp/matrix.hpp"
#include "spp/partition.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace spp::testing {

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo = -5, long hi = 5) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng, lo, hi);
  return m;
}

// Entries a/b with small numerators and denominators.
inline Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(draw(rng, -9, 9), draw(rng, 1, 6));
  return m;
}

// Every ordered p-partition of {1..n}, by counting in base p.
inline std::vector<Partition> every_partition(std::size_t n, std::size_t p) {
  std::vector<Partition> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    out.push_back(Partition::from_assignment(digits, p));
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Convex-combination test by brute force over affinely independent
// subsets of every size up to dim + 1.
inline bool in_hull_exhaustive(const Point& u, const std::vector<Point>& others) {
  const std::size_t m = others.size();
  if (m == 0) return false;
  const std::size_t dim = u.size();
  std::vector<Rational> target(dim + 1);
  target[0] = 1;
  for (std::size_t r = 0; r < dim; ++r) target[r + 1] = u[r];
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1U) pick.push_back(j);
    if (pick.size() > dim + 1) continue;
    Matrix cols(dim + 1, pick.size());
    for (std::size_t j = 0; j < pick.size(); ++j) {
      cols(0, j) = 1;
      for (std::size_t r = 0; r < dim; ++r) cols(r + 1, j) = others[pick[j]][r];
    }
    LinearSolution sol = solve_linear(cols, target);
    if (!sol.has_solution()) continue;
    bool nonnegative = true;
    for (const auto& x : sol.x) nonnegative = nonnegative && x >= 0;
    if (nonnegative) return true;
  }
  return false;
}

// Column `id` of the base pushed eps along the moment curve.
inline Point perturbed_point(const Matrix& base, std::size_t id, const Rational& eps) {
  Point v(base.rows());
  Rational moment = 1;
  for (std::size_t r = 0; r < base.rows(); ++r) {
    moment *= static_cast<long>(id);
    v[r] = base(r, id - 1) + eps * moment;
  }
  return v;
}

// Whether the perturbed blocks have pairwise disjoint hulls: conv(P) meets
// conv(Q) iff the origin lies in the hull of the differences.
inline bool blocks_disjoint_at(const Matrix& base, const Partition& partition, const Rational& eps) {
  for (std::size_t r = 0; r < partition.parts(); ++r)
    for (std::size_t s = r + 1; s < partition.parts(); ++s) {
      std::vector<Point> diffs;
      for (std::size_t a : partition.block(r))
        for (std::size_t b : partition.block(s)) {
          Point pa = perturbed_point(base, a, eps), pb = perturbed_point(base, b, eps);
          for (std::size_t i = 0; i < pa.size(); ++i) pa[i] -= pb[i];
          diffs.push_back(std::move(pa));
        }
      if (in_hull_exhaustive(Point(base.rows(), Rational(0)), diffs)) return false;
    }
  return true;
}

inline Rational tiny_epsilon() {
  Rational eps = 1;
  for (int i = 0; i < 40; ++i) eps /= 10;
  return eps;
}

}  // namespace spp::testing
