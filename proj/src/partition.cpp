#include "spp/partition.hpp"

#include "spp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spp {

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n + 1, false);
  std::size_t total = 0;
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    for (std::size_t id : b) {
      if (id < 1 || id > n) throw DimensionError("partition element " + std::to_string(id) + " outside [1, " +
                                                 std::to_string(n) + "]");
      if (seen[id]) throw DimensionError("partition element " + std::to_string(id) + " appears twice");
      seen[id] = true;
      ++total;
    }
  }
  if (total != n) throw DimensionError("partition blocks do not cover [1, " + std::to_string(n) + "]");
}

Partition Partition::from_assignment(const std::vector<std::size_t>& part_of, std::size_t parts) {
  std::vector<std::vector<std::size_t>> blocks(parts);
  for (std::size_t i = 0; i < part_of.size(); ++i) {
    if (part_of[i] >= parts) throw DimensionError("assignment refers to a missing block");
    blocks[part_of[i]].push_back(i + 1);
  }
  Partition out;
  out.n_ = part_of.size();
  out.blocks_ = std::move(blocks);
  return out;
}

Partition Partition::from_sets(const std::vector<IndexSet>& blocks) {
  std::size_t n = blocks.empty() ? 0 : blocks.front().universe();
  std::vector<std::vector<std::size_t>> lists;
  lists.reserve(blocks.size());
  for (const auto& b : blocks) lists.push_back(b.elements());
  return Partition(n, std::move(lists));
}

std::size_t Partition::part_of(std::size_t id) const {
  for (std::size_t j = 0; j < blocks_.size(); ++j)
    if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), id)) return j;
  throw DimensionError("element " + std::to_string(id) + " not in partition");
}

std::size_t Shape::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

Shape shape_of(const Partition& partition) {
  Shape s;
  s.counts.reserve(partition.parts());
  for (const auto& b : partition.blocks()) s.counts.push_back(b.size());
  return s;
}

namespace {

void require_shape(const Shape& s, std::size_t n, std::size_t p) {
  if (s.counts.size() != p)
    throw DimensionError("shape has " + std::to_string(s.counts.size()) + " parts, expected " + std::to_string(p));
  if (s.total() != n)
    throw DimensionError("shape entries sum to " + std::to_string(s.total()) + ", expected " + std::to_string(n));
}

}  // namespace

ShapeFamily ShapeFamily::all(std::size_t n, std::size_t p) {
  if (p == 0) throw DimensionError("part count must be positive");
  return ShapeFamily(n, p, All{});
}

ShapeFamily ShapeFamily::explicit_list(std::size_t n, std::size_t p, const std::vector<Shape>& shapes) {
  if (p == 0) throw DimensionError("part count must be positive");
  if (shapes.empty()) throw DimensionError("explicit shape list is empty");
  Explicit e;
  for (const auto& s : shapes) {
    require_shape(s, n, p);
    e.shapes.insert(s);
  }
  return ShapeFamily(n, p, std::move(e));
}

ShapeFamily ShapeFamily::bounds(std::size_t n, std::size_t p, std::vector<std::size_t> lower,
                                std::vector<std::size_t> upper) {
  if (p == 0) throw DimensionError("part count must be positive");
  if (lower.size() != p || upper.size() != p) throw DimensionError("shape bounds must have one entry per part");
  std::size_t lo = 0, hi = 0;
  for (std::size_t j = 0; j < p; ++j) {
    if (lower[j] > upper[j]) throw DimensionError("shape bounds have lower > upper at part " + std::to_string(j + 1));
    lo += lower[j];
    hi += std::min(upper[j], n);
  }
  if (lo > n || hi < n) throw DimensionError("shape bounds admit no shape of total " + std::to_string(n));
  return ShapeFamily(n, p, Bounds{std::move(lower), std::move(upper)});
}

ShapeFamily ShapeFamily::predicate(std::size_t n, std::size_t p, std::function<bool(const Shape&)> accepts) {
  if (p == 0) throw DimensionError("part count must be positive");
  return ShapeFamily(n, p, Predicate{std::move(accepts)});
}

bool ShapeFamily::contains(const Shape& shape) const {
  require_shape(shape, n_, p_);
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, All>) {
          return true;
        } else if constexpr (std::is_same_v<T, Explicit>) {
          return v.shapes.contains(shape);
        } else if constexpr (std::is_same_v<T, Bounds>) {
          for (std::size_t j = 0; j < p_; ++j)
            if (shape.counts[j] < v.lower[j] || shape.counts[j] > v.upper[j]) return false;
          return true;
        } else {
          return v.accepts(shape);
        }
      },
      variant_);
}

namespace {

void compositions(std::size_t remaining, std::size_t part, const std::vector<std::size_t>& lo,
                  const std::vector<std::size_t>& hi, Shape& current, std::vector<Shape>& out) {
  const std::size_t p = current.counts.size();
  if (part + 1 == p) {
    if (remaining >= lo[part] && remaining <= hi[part]) {
      current.counts[part] = remaining;
      out.push_back(current);
    }
    return;
  }
  for (std::size_t c = lo[part]; c <= std::min(hi[part], remaining); ++c) {
    current.counts[part] = c;
    compositions(remaining - c, part + 1, lo, hi, current, out);
  }
}

}  // namespace

std::vector<Shape> enumerate_shapes(const ShapeFamily& family) {
  const std::size_t n = family.n(), p = family.parts();
  if (const auto* e = std::get_if<ShapeFamily::Explicit>(&family.variant()))
    return {e->shapes.begin(), e->shapes.end()};

  std::vector<std::size_t> lo(p, 0), hi(p, n);
  if (const auto* b = std::get_if<ShapeFamily::Bounds>(&family.variant())) {
    lo = b->lower;
    for (std::size_t j = 0; j < p; ++j) hi[j] = std::min(b->upper[j], n);
  }
  std::vector<Shape> out;
  Shape current{std::vector<std::size_t>(p, 0)};
  compositions(n, 0, lo, hi, current, out);
  if (std::holds_alternative<ShapeFamily::Predicate>(family.variant()))
    std::erase_if(out, [&](const Shape& s) { return !family.contains(s); });
  return out;
}

PartitionMatrix partition_matrix(const AttributeMatrix& a, const Partition& partition) {
  if (partition.n() != a.cols())
    throw DimensionError("partition of " + std::to_string(partition.n()) + " elements applied to a matrix with " +
                         std::to_string(a.cols()) + " columns");
  PartitionMatrix out(a.rows(), partition.parts());
  for (std::size_t j = 0; j < partition.parts(); ++j)
    for (std::size_t id : partition.block(j))
      for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) += a(r, id - 1);
  return out;
}

AttributeMatrix lift(const AttributeMatrix& a) {
  AttributeMatrix out(a.rows() + 1, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t c = 0; c < a.cols(); ++c) out(a.rows(), c) = c + 1;
  return out;
}

}  // namespace spp
