#include "spp/generic.hpp"

#include "spp/errors.hpp"
#include "spp/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace spp {

std::vector<Rational> PerturbedMatrix::homogeneous_column(std::size_t id, std::size_t eps) const {
  std::vector<Rational> col(rows() + 1);
  col[0] = 1;
  Integer moment = 1;
  for (std::size_t r = 0; r < rows(); ++r) {
    moment *= id;
    col[r + 1] = base_(r, id - 1) + Rational(moment * eps);
  }
  return col;
}

namespace {

void require_subset(const PerturbedMatrix& m, std::span<const std::size_t> subset) {
  if (subset.size() != m.rows())
    throw DimensionError("hyperplane subset has " + std::to_string(subset.size()) + " elements, expected " +
                         std::to_string(m.rows()));
  for (std::size_t j = 0; j < subset.size(); ++j) {
    if (subset[j] < 1 || subset[j] > m.cols()) throw DimensionError("hyperplane subset element out of range");
    if (j > 0 && subset[j - 1] >= subset[j]) throw DimensionError("hyperplane subset must be strictly increasing");
  }
}

// Homogeneous columns of `subset` at every node 0..d, reused across the
// elements tested against one hyperplane.
std::vector<Matrix> node_frames(const PerturbedMatrix& m, std::span<const std::size_t> subset) {
  const std::size_t d = m.rows();
  std::vector<Matrix> frames;
  frames.reserve(d + 1);
  for (std::size_t eps = 0; eps <= d; ++eps) {
    Matrix frame(d + 1, d + 1);
    for (std::size_t j = 0; j < d; ++j) {
      auto col = m.homogeneous_column(subset[j], eps);
      for (std::size_t r = 0; r <= d; ++r) frame(r, j) = std::move(col[r]);
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

int sign_with_frames(const PerturbedMatrix& m, std::vector<Matrix>& frames, std::size_t id) {
  const std::size_t d = m.rows();
  std::vector<Rational> values(d + 1);
  for (std::size_t eps = 0; eps <= d; ++eps) {
    auto col = m.homogeneous_column(id, eps);
    for (std::size_t r = 0; r <= d; ++r) frames[eps](r, d) = std::move(col[r]);
    values[eps] = determinant(frames[eps]);
  }
  for (const Rational& c : solve_vandermonde(values))
    if (c != 0) return c.sign();
  throw InternalError("determinant polynomial vanished identically for element " + std::to_string(id));
}

}  // namespace

int generic_sign(const PerturbedMatrix& matrix, std::span<const std::size_t> subset, std::size_t id) {
  require_subset(matrix, subset);
  if (id < 1 || id > matrix.cols()) throw DimensionError("element " + std::to_string(id) + " out of range");
  if (std::binary_search(subset.begin(), subset.end(), id))
    throw DimensionError("element " + std::to_string(id) + " lies in the hyperplane subset");
  auto frames = node_frames(matrix, subset);
  return sign_with_frames(matrix, frames, id);
}

HyperplaneSplit split_by_hyperplane(const PerturbedMatrix& matrix, std::span<const std::size_t> subset) {
  require_subset(matrix, subset);
  if (matrix.cols() <= matrix.rows()) throw DimensionError("hyperplane split needs more columns than rows");
  auto frames = node_frames(matrix, subset);
  HyperplaneSplit split;
  for (std::size_t id = 1; id <= matrix.cols(); ++id) {
    if (std::binary_search(subset.begin(), subset.end(), id)) continue;
    (sign_with_frames(matrix, frames, id) < 0 ? split.below : split.above).push_back(id);
  }
  return split;
}

namespace {

std::vector<std::size_t> merged(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::pair<Partition, Partition> triple_partitions(std::size_t n, const HyperplaneSplit& split,
                                                  const std::vector<std::size_t>& j_below,
                                                  const std::vector<std::size_t>& j_above) {
  auto low = merged(split.below, j_below);
  auto high = merged(split.above, j_above);
  return {Partition(n, {low, high}), Partition(n, {high, low})};
}

void sort_unique(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Next combination of `size` elements from 1..n in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_two_partition_cap(std::size_t size, const EnumerationLimits& limits) {
  if (size > limits.max_two_partitions)
    throw CapacityError("generic 2-partition set exceeds the cap of " + std::to_string(limits.max_two_partitions) +
                        " (raise --max-two-partitions)");
}

}  // namespace

std::pair<Partition, Partition> partitions_from_triple(const PerturbedMatrix& matrix, const SeparatorTriple& triple) {
  std::vector<std::size_t> rejoined = merged(triple.below, triple.above);
  if (rejoined != triple.subset) throw DimensionError("triple split does not partition its subset");
  auto split = split_by_hyperplane(matrix, triple.subset);
  return triple_partitions(matrix.cols(), split, triple.below, triple.above);
}

bool GenericPartitionSet::contains(const Partition& partition) const {
  return std::binary_search(partitions.begin(), partitions.end(), partition);
}

GenericPartitionSet enumerate_generic_2partitions(const PerturbedMatrix& matrix, const EnumerationLimits& limits) {
  const std::size_t n = matrix.cols(), d = matrix.rows();
  GenericPartitionSet out;
  out.rows = d;
  out.n = n;
  out.p = 2;

  if (n <= d) {
    if (n >= 63 || (std::size_t{1} << n) > limits.max_two_partitions) check_two_partition_cap(SIZE_MAX, limits);
    std::vector<std::size_t> part_of(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) part_of[i] = (mask >> i) & 1u;
      out.partitions.push_back(Partition::from_assignment(part_of, 2));
    }
    sort_unique(out.partitions);
    out.two_partition_count = out.size();
    return out;
  }

  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> c(d);
  for (std::size_t j = 0; j < d; ++j) c[j] = j + 1;
  do subsets.push_back(c);
  while (next_combination(c, n));

  std::vector<std::vector<Partition>> produced(subsets.size());
  parallel_for(subsets.size(), limits.threads, [&](std::size_t s) {
    const auto& subset = subsets[s];
    HyperplaneSplit split = split_by_hyperplane(matrix, subset);
    auto& local = produced[s];
    local.reserve(std::size_t{2} << d);
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<std::size_t> j_below, j_above;
      for (std::size_t j = 0; j < d; ++j) ((mask >> j) & 1u ? j_above : j_below).push_back(subset[j]);
      auto [low, high] = triple_partitions(n, split, j_below, j_above);
      local.push_back(std::move(low));
      local.push_back(std::move(high));
    }
    sort_unique(local);
  });

  for (auto& local : produced) {
    out.partitions.insert(out.partitions.end(), std::make_move_iterator(local.begin()),
                          std::make_move_iterator(local.end()));
    local.clear();
    if (out.partitions.size() > 4 * limits.max_two_partitions + 1024) {
      sort_unique(out.partitions);
      check_two_partition_cap(out.size(), limits);
    }
  }
  sort_unique(out.partitions);
  check_two_partition_cap(out.size(), limits);
  out.two_partition_count = out.size();
  return out;
}

std::size_t pair_index(std::size_t r, std::size_t s, std::size_t p) {
  // Pairs before row r: (p-1) + (p-2) + ... + (p-r).
  return r * (2 * p - r - 1) / 2 + (s - r - 1);
}

std::optional<Partition> assemble(std::span<const Partition> pair_partitions, std::size_t n, std::size_t p) {
  if (p == 0) throw DimensionError("part count must be positive");
  if (pair_partitions.size() != p * (p - 1) / 2)
    throw DimensionError("assembly needs C(p,2) = " + std::to_string(p * (p - 1) / 2) + " 2-partitions");
  std::vector<IndexSet> blocks(p, IndexSet::full(n));
  if (p == 1) return Partition::from_sets(blocks);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t s = r + 1; s < p; ++s) {
      const Partition& pair = pair_partitions[pair_index(r, s, p)];
      if (pair.n() != n || pair.parts() != 2) throw DimensionError("assembly input is not a 2-partition of [n]");
      IndexSet first(n), second(n);
      for (std::size_t id : pair.block(0)) first.insert(id);
      for (std::size_t id : pair.block(1)) second.insert(id);
      blocks[r] &= first;
      blocks[s] &= second;
    }
  if (!covers(blocks, n)) return std::nullopt;
  return Partition::from_sets(blocks);
}

namespace {

// Two-partition halves as flat bitset words, W words per set.
struct AssemblyPlan {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t words = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::uint64_t> halves;  // [candidate][side][word]
  std::vector<std::uint64_t> full;

  AssemblyPlan(std::size_t elements, std::size_t parts, const std::vector<Partition>& two_partitions)
      : n(elements), p(parts), words((elements + 63) / 64) {
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = r + 1; s < p; ++s) pairs.emplace_back(r, s);
    full = IndexSet::full(n).words();
    halves.reserve(two_partitions.size() * 2 * words);
    for (const auto& t : two_partitions)
      for (std::size_t side = 0; side < 2; ++side) {
        IndexSet set(n);
        for (std::size_t id : t.block(side)) set.insert(id);
        halves.insert(halves.end(), set.words().begin(), set.words().end());
      }
  }

  std::size_t candidates() const { return halves.size() / (2 * words); }
  const std::uint64_t* half(std::size_t c, std::size_t side) const { return &halves[(2 * c + side) * words]; }
};

class Assembler {
 public:
  Assembler(const AssemblyPlan& plan, std::atomic<std::uint64_t>& nodes, std::uint64_t cap)
      : plan_(plan),
        frame_(plan.p * plan.words),
        stack_((plan.pairs.size() + 1) * frame_),
        nodes_(nodes),
        cap_(cap) {
    for (std::size_t r = 0; r < plan_.p; ++r)
      std::copy(plan_.full.begin(), plan_.full.end(), stack_.begin() + r * plan_.words);
  }

  // Explores every list whose first entry is two-partition `first`.
  std::vector<Partition> run(std::size_t first) {
    std::vector<Partition> found;
    if (choose(0, first)) descend(1, found);
    flush();
    return found;
  }

 private:
  std::uint64_t* block(std::size_t depth, std::size_t r) { return &stack_[depth * frame_ + r * plan_.words]; }

  // Applies candidate c at `depth`; false when the blocks stop covering [n].
  bool choose(std::size_t depth, std::size_t c) {
    auto [r, s] = plan_.pairs[depth];
    std::copy_n(block(depth, 0), frame_, block(depth + 1, 0));
    std::uint64_t* br = block(depth + 1, r);
    std::uint64_t* bs = block(depth + 1, s);
    const std::uint64_t* first = plan_.half(c, 0);
    const std::uint64_t* second = plan_.half(c, 1);
    for (std::size_t w = 0; w < plan_.words; ++w) {
      br[w] &= first[w];
      bs[w] &= second[w];
    }
    if (++local_nodes_ >= 4096) flush();
    for (std::size_t w = 0; w < plan_.words; ++w) {
      std::uint64_t cover = 0;
      for (std::size_t q = 0; q < plan_.p; ++q) cover |= block(depth + 1, q)[w];
      if (cover != plan_.full[w]) return false;
    }
    return true;
  }

  void descend(std::size_t depth, std::vector<Partition>& found) {
    if (depth == plan_.pairs.size()) {
      std::vector<IndexSet> sets(plan_.p, IndexSet(plan_.n));
      for (std::size_t q = 0; q < plan_.p; ++q)
        for (std::size_t id = 1; id <= plan_.n; ++id)
          if ((block(depth, q)[(id - 1) / 64] >> ((id - 1) % 64)) & 1U) sets[q].insert(id);
      found.push_back(Partition::from_sets(sets));
      return;
    }
    const std::size_t count = plan_.candidates();
    for (std::size_t c = 0; c < count; ++c)
      if (choose(depth, c)) descend(depth + 1, found);
  }

  void flush() {
    std::uint64_t total = nodes_.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > cap_)
      throw CapacityError("partition assembly exceeds the cap of " + std::to_string(cap_) +
                          " search nodes (raise --max-assembly-nodes)");
  }

  const AssemblyPlan& plan_;
  std::size_t frame_;
  std::vector<std::uint64_t> stack_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t cap_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

GenericPartitionSet enumerate_generic_p_partitions(const PerturbedMatrix& matrix, std::size_t p,
                                                   const EnumerationLimits& limits) {
  if (p == 0) throw DimensionError("part count must be positive");
  const std::size_t n = matrix.cols();
  if (p == 1) {
    GenericPartitionSet out;
    out.rows = matrix.rows();
    out.n = n;
    out.p = 1;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    out.partitions.emplace_back(n, std::vector<std::vector<std::size_t>>{all});
    out.two_partition_count = 0;
    return out;
  }

  GenericPartitionSet two = enumerate_generic_2partitions(matrix, limits);
  const AssemblyPlan plan(n, p, two.partitions);
  std::atomic<std::uint64_t> nodes{0};
  const std::size_t width = plan.candidates();
  std::vector<std::vector<Partition>> produced(width);
  parallel_for(width, limits.threads, [&](std::size_t first) {
    Assembler assembler(plan, nodes, limits.max_assembly_nodes);
    produced[first] = assembler.run(first);
  });

  GenericPartitionSet out;
  out.rows = matrix.rows();
  out.n = n;
  out.p = p;
  for (auto& local : produced)
    out.partitions.insert(out.partitions.end(), std::make_move_iterator(local.begin()),
                          std::make_move_iterator(local.end()));
  sort_unique(out.partitions);
  out.two_partition_count = two.size();
  out.assembly_nodes = nodes.load();
  return out;
}

}  // namespace spp
