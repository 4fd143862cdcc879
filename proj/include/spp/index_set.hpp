#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace spp {

// Fixed-universe bitset over element ids 1..n. Used on the hot paths of
// partition assembly, where allocation-free in-place updates matter.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static IndexSet full(std::size_t n) {
    IndexSet s(n);
    for (std::size_t i = 1; i <= n; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return n_; }

  void insert(std::size_t id) { words_[(id - 1) / 64] |= bit(id); }
  bool contains(std::size_t id) const { return (words_[(id - 1) / 64] & bit(id)) != 0; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  // *this = a & b without reallocating.
  void assign_intersection(const IndexSet& a, const IndexSet& b) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  // Sorted element ids.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)) + 1);
        word &= word - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  static std::uint64_t bit(std::size_t id) { return std::uint64_t{1} << ((id - 1) % 64); }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// True when the union of `sets` is every element of the universe.
inline bool covers(const std::vector<IndexSet>& sets, std::size_t n) {
  if (sets.empty()) return n == 0;
  const std::size_t words = sets.front().words().size();
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = 0;
    for (const auto& s : sets) acc |= s.words()[w];
    std::size_t bits = (w + 1) * 64 <= n ? 64 : n - w * 64;
    std::uint64_t want = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    if (acc != want) return false;
  }
  return true;
}

}  // namespace spp
