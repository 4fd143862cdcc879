#pragma once

// Exhaustive ground truth for small instances. Shares the exact linear
// algebra and the convexity test with the fast path but never touches the
// generic-partition machinery.

#include "spp/objective.hpp"
#include "spp/partition.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace spp {

struct BruteForceLimits {
  std::size_t max_n = 9;
  std::size_t max_p = 4;
  bool force = false;
};

// Throws CapacityError when (n, p) exceeds the limits and force is off.
void require_brute_force_scale(std::size_t n, std::size_t p, const BruteForceLimits& limits);

// Every admissible ordered p-partition of {1..n}, ordered lexicographically
// by the assignment vector (block of element 1, block of element 2, ...).
std::vector<Partition> enumerate_all_partitions(std::size_t n, std::size_t p, const ShapeFamily& shapes,
                                                const BruteForceLimits& limits = {});

// Vertices of the convex hull of every admissible part-sum matrix, in
// row-major lexicographic order.
std::vector<PartitionMatrix> brute_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                            const BruteForceLimits& limits = {});

Rational brute_solve(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes, const Objective& objective,
                     const BruteForceLimits& limits = {});

struct BruteResult {
  std::size_t all_partitions = 0;
  std::vector<PartitionMatrix> vertex_set;
  std::vector<Rational> best_values;  // one per objective, in input order
};

// One pass over the admissible partitions serving the vertex set and every
// objective at once.
BruteResult brute_force(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                        const std::vector<Objective>& objectives, const BruteForceLimits& limits = {});

}  // namespace spp
