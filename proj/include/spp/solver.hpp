#pragma once

#include "spp/objective.hpp"
#include "spp/vertices.hpp"

namespace spp {

struct SolveReport {
  Partition best_partition;
  PartitionMatrix best_matrix;
  Rational best_value;
  // One oracle query per admissible generic partition.
  std::size_t evaluations = 0;
  EnumerationCounts counts;  // candidates and vertices stay zero
};

// Maximizes the objective over admissible partitions by scanning the
// admissible generic partitions of lift(a). For a convex objective the
// result is a global maximizer. Ties go to the first partition in
// canonical order. Built-in objectives are evaluated on
// `limits.threads` workers; external oracles are queried one at a time.
SolveReport solve(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes, const Objective& objective,
                  const EnumerationLimits& limits = {});

}  // namespace spp
