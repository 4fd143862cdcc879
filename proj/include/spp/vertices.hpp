#pragma once

#include "spp/generic.hpp"
#include "spp/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spp {

struct PolytopeOptions {
  EnumerationLimits enumeration;
  // Cap on the number of distinct candidate matrices.
  std::size_t max_candidates = 20'000;
  // Largest number of affine bases the exhaustive vertex test may visit
  // before switching to the exact simplex test.
  std::uint64_t caratheodory_budget = 2'000;
};

struct EnumerationCounts {
  std::size_t two_partitions = 0;         // generic 2-partitions of the lifted matrix
  std::size_t generic_partitions = 0;     // generic p-partitions of the lifted matrix
  std::size_t admissible_partitions = 0;  // ... whose shape is admissible
  std::size_t candidates = 0;             // distinct part-sum matrices among those
  std::size_t vertices = 0;
};

// Generic partitions of lift(a) whose shape is in `shapes`, in canonical order.
struct AdmissiblePartitions {
  GenericPartitionSet generic;
  std::vector<Partition> admissible;
};

// Throws DimensionError unless `shapes` is a family of p-shapes of a.cols().
void require_compatible(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes);

AdmissiblePartitions admissible_generic_partitions(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                                   const EnumerationLimits& limits = {});

// Distinct matrices A^pi over admissible generic partitions of lift(A), in
// row-major lexicographic order, each with every partition that produced it.
struct CandidateSet {
  std::vector<PartitionMatrix> members;
  std::vector<std::vector<Partition>> witnesses;
  EnumerationCounts counts;
};

struct VertexReport {
  std::vector<PartitionMatrix> vertices;
  std::vector<std::vector<Partition>> witnesses;
  EnumerationCounts counts;
};

CandidateSet candidate_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                const PolytopeOptions& options = {});

// True iff u is not a convex combination of the other candidates.
// Throws DimensionError if u is not among `candidates`.
bool is_vertex(const PartitionMatrix& u, std::span<const PartitionMatrix> candidates,
               std::uint64_t caratheodory_budget = PolytopeOptions{}.caratheodory_budget);

// keep[i] tells whether candidates.members[i] is a vertex of their hull.
std::vector<bool> vertex_flags(const CandidateSet& candidates, const PolytopeOptions& options = {});

VertexReport enumerate_vertices(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes,
                                const PolytopeOptions& options = {});

// Row-major flattening used by the convexity tests.
std::vector<Rational> flatten(const Matrix& m);

}  // namespace spp
