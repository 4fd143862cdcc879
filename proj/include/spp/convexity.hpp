#pragma once

#include "spp/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spp {

using Point = std::vector<Rational>;

enum class HullMethod {
  // Exhaustive search over affine bases of the other points.
  caratheodory,
  // Phase-one simplex. A floating-point run proposes a certificate that is
  // checked exactly; the exact simplex (Bland's rule) decides otherwise.
  simplex,
  // Carathéodory while the number of candidate bases stays within budget,
  // simplex otherwise.
  automatic,
};

// Number of d-subsets an exhaustive affine-basis search over `others`
// would visit (saturating at UINT64_MAX).
std::uint64_t affine_basis_trials(std::span<const Point> others);

// Whether u is a convex combination of `others`. All points must have the
// same dimension. An empty `others` never contains u.
bool in_convex_hull(std::span<const Rational> u, std::span<const Point> others,
                    HullMethod method = HullMethod::automatic, std::uint64_t caratheodory_budget = 2'000);

// sure[i] is set when points[i] is the unique maximizer of one of a fixed
// set of linear functionals, which makes it a vertex. Unset entries may
// still be vertices.
std::vector<bool> certified_vertices(std::span<const Point> points);

// extreme[i] tells whether points[i] is a vertex of conv(points). Points
// must be pairwise distinct. Each undecided point goes through
// in_convex_hull in automatic mode.
std::vector<bool> extreme_points(std::span<const Point> points, unsigned threads = 1,
                                 std::uint64_t caratheodory_budget = 2'000);

}  // namespace spp
