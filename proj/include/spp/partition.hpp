#pragma once

#include "spp/index_set.hpp"
#include "spp/matrix.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <variant>
#include <vector>

namespace spp {

// Attribute vectors are the columns of a k x n matrix; the part-sum matrix
// of a partition is k x p. Both are plain exact matrices.
using AttributeMatrix = Matrix;
using PartitionMatrix = Matrix;

// Ordered p-tuple of disjoint blocks covering {1, ..., n}. Empty blocks are
// allowed. Blocks are stored as sorted element-id lists, which makes the
// representation canonical: equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws DimensionError unless the blocks partition {1..n}.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);
  // part_of[i - 1] is the 0-based block of element i.
  static Partition from_assignment(const std::vector<std::size_t>& part_of, std::size_t parts);
  // Blocks given as index sets; they must be disjoint and covering.
  static Partition from_sets(const std::vector<IndexSet>& blocks);

  std::size_t n() const { return n_; }
  std::size_t parts() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t j) const { return blocks_[j]; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  // 0-based block index holding element id i.
  std::size_t part_of(std::size_t id) const;

  // Lexicographic over the block sequence.
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

struct Shape {
  std::vector<std::size_t> counts;

  std::size_t total() const;
  friend auto operator<=>(const Shape&, const Shape&) = default;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape_of(const Partition& partition);

// The admissible shape set, queryable by membership. File-level families
// are declarative (all / explicit list / bounds); library callers may
// also supply an arbitrary membership predicate.
class ShapeFamily {
 public:
  struct All {};
  struct Explicit {
    std::set<Shape> shapes;
  };
  struct Bounds {
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
  };
  struct Predicate {
    std::function<bool(const Shape&)> accepts;
  };
  using Variant = std::variant<All, Explicit, Bounds, Predicate>;

  static ShapeFamily all(std::size_t n, std::size_t p);
  // Throws DimensionError for an empty list or a shape of the wrong arity/total.
  static ShapeFamily explicit_list(std::size_t n, std::size_t p, const std::vector<Shape>& shapes);
  // Throws DimensionError unless lower <= upper and sum(lower) <= n <= sum(upper).
  static ShapeFamily bounds(std::size_t n, std::size_t p, std::vector<std::size_t> lower,
                            std::vector<std::size_t> upper);
  // Nonemptiness of a predicate family is the caller's responsibility.
  static ShapeFamily predicate(std::size_t n, std::size_t p, std::function<bool(const Shape&)> accepts);

  std::size_t n() const { return n_; }
  std::size_t parts() const { return p_; }
  const Variant& variant() const { return variant_; }

  // Throws DimensionError when the shape has the wrong arity or total.
  bool contains(const Shape& shape) const;

 private:
  ShapeFamily(std::size_t n, std::size_t p, Variant v) : n_(n), p_(p), variant_(std::move(v)) {}

  std::size_t n_ = 0;
  std::size_t p_ = 0;
  Variant variant_;
};

inline bool shape_member(const ShapeFamily& family, const Shape& shape) { return family.contains(shape); }

// Every admissible p-shape of n, lexicographically increasing.
std::vector<Shape> enumerate_shapes(const ShapeFamily& family);

// k x p matrix whose column j sums the columns of `a` indexed by block j.
PartitionMatrix partition_matrix(const AttributeMatrix& a, const Partition& partition);

// Appends the index row (1, 2, ..., n).
AttributeMatrix lift(const AttributeMatrix& a);

}  // namespace spp
