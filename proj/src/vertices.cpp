#include "spp/vertices.hpp"

#include "spp/convexity.hpp"
#include "spp/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace spp {

std::vector<Rational> flatten(const Matrix& m) { return {m.entries().begin(), m.entries().end()}; }

void require_compatible(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes) {
  if (a.cols() == 0) throw DimensionError("attribute matrix has no columns");
  if (p == 0) throw DimensionError("part count must be positive");
  if (shapes.n() != a.cols() || shapes.parts() != p)
    throw DimensionError("shape family describes " + std::to_string(shapes.parts()) + "-shapes of " +
                         std::to_string(shapes.n()) + ", problem has p = " + std::to_string(p) +
                         " and n = " + std::to_string(a.cols()));
}

AdmissiblePartitions admissible_generic_partitions(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                                   const EnumerationLimits& limits) {
  require_compatible(a, p, shapes);
  AdmissiblePartitions out;
  out.generic = enumerate_generic_p_partitions(PerturbedMatrix(lift(a)), p, limits);
  for (const auto& partition : out.generic.partitions)
    if (shapes.contains(shape_of(partition))) out.admissible.push_back(partition);
  return out;
}

CandidateSet candidate_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                const PolytopeOptions& options) {
  AdmissiblePartitions parts = admissible_generic_partitions(a, p, shapes, options.enumeration);
  std::map<PartitionMatrix, std::vector<Partition>> grouped;
  for (auto& partition : parts.admissible) {
    grouped[partition_matrix(a, partition)].push_back(partition);
    if (grouped.size() > options.max_candidates)
      throw CapacityError("candidate set exceeds the cap of " + std::to_string(options.max_candidates) +
                          " matrices (raise --max-candidates)");
  }

  CandidateSet out;
  out.counts.two_partitions = parts.generic.two_partition_count;
  out.counts.generic_partitions = parts.generic.size();
  out.counts.admissible_partitions = parts.admissible.size();
  for (auto& [matrix, witnesses] : grouped) {
    out.members.push_back(matrix);
    out.witnesses.push_back(std::move(witnesses));
  }
  out.counts.candidates = out.members.size();
  return out;
}

bool is_vertex(const PartitionMatrix& u, std::span<const PartitionMatrix> candidates,
               std::uint64_t caratheodory_budget) {
  std::vector<Point> others;
  bool found = false;
  for (const auto& c : candidates) {
    if (c == u) {
      found = true;
      continue;
    }
    if (c.rows() != u.rows() || c.cols() != u.cols()) throw DimensionError("candidate matrices differ in shape");
    others.push_back(flatten(c));
  }
  if (!found) throw DimensionError("is_vertex: matrix is not a member of the candidate set");
  return !in_convex_hull(flatten(u), others, HullMethod::automatic, caratheodory_budget);
}

std::vector<bool> vertex_flags(const CandidateSet& candidates, const PolytopeOptions& options) {
  std::vector<Point> points;
  points.reserve(candidates.members.size());
  for (const auto& member : candidates.members) points.push_back(flatten(member));
  return extreme_points(points, options.enumeration.threads, options.caratheodory_budget);
}

VertexReport enumerate_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                const PolytopeOptions& options) {
  CandidateSet candidates = candidate_vertices(a, p, shapes, options);
  const std::vector<bool> keep = vertex_flags(candidates, options);

  VertexReport report;
  report.counts = candidates.counts;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    report.vertices.push_back(std::move(candidates.members[i]));
    report.witnesses.push_back(std::move(candidates.witnesses[i]));
  }
  report.counts.vertices = report.vertices.size();
  return report;
}

}  // namespace spp
