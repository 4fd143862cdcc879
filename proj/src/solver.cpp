#include "spp/solver.hpp"

#include "spp/errors.hpp"
#include "spp/parallel.hpp"

namespace spp {

SolveReport solve(const AttributeMatrix& a, std::size_t p, const ShapeFamily& shapes, const Objective& objective,
                  const EnumerationLimits& limits) {
  require_compatible(a, p, shapes);
  objective.require_compatible(a, p);
  AdmissiblePartitions parts = admissible_generic_partitions(a, p, shapes, limits);
  const auto& admissible = parts.admissible;
  if (admissible.empty()) throw InternalError("no admissible generic partition for a nonempty shape family");

  std::vector<PartitionMatrix> matrices(admissible.size());
  std::vector<Rational> values(admissible.size());
  const unsigned workers = objective.is_external() ? 1u : limits.threads;
  parallel_for(admissible.size(), workers, [&](std::size_t i) {
    matrices[i] = partition_matrix(a, admissible[i]);
    values[i] = objective.evaluate(matrices[i]);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;

  SolveReport report;
  report.best_partition = admissible[best];
  report.best_matrix = std::move(matrices[best]);
  report.best_value = std::move(values[best]);
  report.evaluations = admissible.size();
  report.counts.two_partitions = parts.generic.two_partition_count;
  report.counts.generic_partitions = parts.generic.size();
  report.counts.admissible_partitions = admissible.size();
  return report;
}

}  // namespace spp
