#include "spp/reference.hpp"

#include "spp/convexity.hpp"
#include "spp/errors.hpp"
#include "spp/vertices.hpp"

#include <algorithm>
#include <string>

namespace spp {

void require_brute_force_scale(std::size_t n, std::size_t p, const BruteForceLimits& limits) {
  if (limits.force) return;
  if (n > limits.max_n || p > limits.max_p)
    throw CapacityError("brute-force reference limited to n <= " + std::to_string(limits.max_n) + ", p <= " +
                        std::to_string(limits.max_p) + " (got n = " + std::to_string(n) + ", p = " +
                        std::to_string(p) + "; pass --force to override)");
}

std::vector<Partition> enumerate_all_partitions(std::size_t n, std::size_t p, const ShapeFamily& shapes,
                                                const BruteForceLimits& limits) {
  require_brute_force_scale(n, p, limits);
  if (p == 0) throw DimensionError("part count must be positive");
  if (shapes.n() != n || shapes.parts() != p) throw DimensionError("shape family does not match (n, p)");

  std::vector<Partition> out;
  std::vector<std::size_t> part_of(n, 0);
  Shape shape{std::vector<std::size_t>(p, 0)};
  while (true) {
    std::fill(shape.counts.begin(), shape.counts.end(), 0);
    for (std::size_t j : part_of) ++shape.counts[j];
    if (shapes.contains(shape)) out.push_back(Partition::from_assignment(part_of, p));

    std::size_t i = n;
    while (i > 0 && part_of[i - 1] + 1 == p) part_of[--i] = 0;
    if (i == 0) break;
    ++part_of[i - 1];
  }
  return out;
}

namespace {

std::vector<PartitionMatrix> hull_vertices(std::vector<PartitionMatrix> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Point> flat;
  flat.reserve(points.size());
  for (const auto& m : points) flat.push_back(flatten(m));
  std::vector<bool> extreme = extreme_points(flat);
  std::vector<PartitionMatrix> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (extreme[i]) out.push_back(std::move(points[i]));
  return out;
}

BruteResult brute_pass(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                       const std::vector<Objective>& objectives, const BruteForceLimits& limits, bool with_vertices) {
  if (shapes.n() != a.cols()) throw DimensionError("shape family does not match the matrix");
  for (const auto& o : objectives) o.require_compatible(a, p);
  std::vector<Partition> partitions = enumerate_all_partitions(a.cols(), p, shapes, limits);

  BruteResult result;
  result.all_partitions = partitions.size();
  std::vector<PartitionMatrix> matrices;
  matrices.reserve(partitions.size());
  for (const auto& partition : partitions) matrices.push_back(partition_matrix(a, partition));

  for (const auto& o : objectives) {
    std::optional<Rational> best;
    for (const auto& m : matrices) {
      Rational v = o.evaluate(m);
      if (!best || v > *best) best = std::move(v);
    }
    if (!best) throw InternalError("no admissible partition for a nonempty shape family");
    result.best_values.push_back(std::move(*best));
  }
  if (with_vertices) result.vertex_set = hull_vertices(std::move(matrices));
  return result;
}

}  // namespace

BruteResult brute_force(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                        const std::vector<Objective>& objectives, const BruteForceLimits& limits) {
  return brute_pass(a, p, shapes, objectives, limits, true);
}

std::vector<PartitionMatrix> brute_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                            const BruteForceLimits& limits) {
  return brute_force(a, p, shapes, {}, limits).vertex_set;
}

Rational brute_solve(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes, const Objective& objective,
                     const BruteForceLimits& limits) {
  return std::move(brute_pass(a, p, shapes, {objective}, limits, false).best_values.front());
}

}  // namespace spp
