#pragma once

// Enumeration of generic partitions: partitions whose blocks have pairwise
// disjoint convex hulls after the columns are pushed an infinitesimal step
// along the moment curve. The perturbation parameter is never instantiated;
// every "small epsilon" decision is the sign of the first nonzero
// coefficient of a determinant polynomial, recovered exactly by
// interpolation at the integer nodes 0..d.

#include "spp/matrix.hpp"
#include "spp/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spp {

struct EnumerationLimits {
  // Cap on the deduplicated generic 2-partition set.
  std::size_t max_two_partitions = 1'000'000;
  // Cap on the search nodes visited while assembling p-partitions.
  std::uint64_t max_assembly_nodes = 2'000'000'000;
  unsigned threads = 1;
};

// A d x n base matrix whose column i (1-based) is implicitly
// base^i + eps * (i, i^2, ..., i^d).
class PerturbedMatrix {
 public:
  explicit PerturbedMatrix(AttributeMatrix base) : base_(std::move(base)) {}

  const AttributeMatrix& base() const { return base_; }
  std::size_t rows() const { return base_.rows(); }
  std::size_t cols() const { return base_.cols(); }

  // (1, base^id + eps * moment(id)) for an integer node eps.
  std::vector<Rational> homogeneous_column(std::size_t id, std::size_t eps) const;

 private:
  AttributeMatrix base_;
};

// (I, J_below, J_above): a sorted d-subset I spanning an oriented
// hyperplane and a split of I itself.
struct SeparatorTriple {
  std::vector<std::size_t> subset;
  std::vector<std::size_t> below;
  std::vector<std::size_t> above;
};

struct HyperplaneSplit {
  std::vector<std::size_t> below;
  std::vector<std::size_t> above;
};

// Sign (+1 or -1) for all small eps > 0 of
//   det[(1, col_{i_1}(eps)), ..., (1, col_{i_d}(eps)), (1, col_id(eps))].
// `subset` must be strictly increasing with d = rows() entries and must not
// contain `id`. Throws DimensionError on bad arguments, InternalError if the
// polynomial vanishes identically.
int generic_sign(const PerturbedMatrix& matrix, std::span<const std::size_t> subset, std::size_t id);

// Elements outside `subset` grouped by generic_sign. Requires n > d.
HyperplaneSplit split_by_hyperplane(const PerturbedMatrix& matrix, std::span<const std::size_t> subset);

// (below u J_below, above u J_above) and (above u J_above, below u J_below).
std::pair<Partition, Partition> partitions_from_triple(const PerturbedMatrix& matrix, const SeparatorTriple& triple);

// Deduplicated, sorted partition set plus enumeration statistics.
struct GenericPartitionSet {
  std::size_t rows = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<Partition> partitions;
  std::size_t two_partition_count = 0;
  std::uint64_t assembly_nodes = 0;

  std::size_t size() const { return partitions.size(); }
  bool contains(const Partition& partition) const;
};

GenericPartitionSet enumerate_generic_2partitions(const PerturbedMatrix& matrix, const EnumerationLimits& limits = {});

// 0-based position of the pair (r, s), r < s, in the lexicographic list
// (0,1), (0,2), ..., (p-2,p-1).
std::size_t pair_index(std::size_t r, std::size_t s, std::size_t p);

// Intersects, for each part i, the first blocks of the pairs (i, j > i)
// and the second blocks of the pairs (j < i, i). Returns the tuple when it
// covers {1..n}, nothing otherwise. `pair_partitions` holds C(p,2) ordered
// 2-partitions in pair_index order.
std::optional<Partition> assemble(std::span<const Partition> pair_partitions, std::size_t n, std::size_t p);

// All generic p-partitions: ([n]) for p = 1, otherwise the covering
// assemblies of every list of C(p,2) generic 2-partitions. Lists are
// explored depth-first with partial intersections and abandoned as soon as
// some element has no remaining block. Throws CapacityError on a guard.
GenericPartitionSet enumerate_generic_p_partitions(const PerturbedMatrix& matrix, std::size_t p,
                                                   const EnumerationLimits& limits = {});

}  // namespace spp
