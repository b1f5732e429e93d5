#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercsf {

// Subsets of the rank set [n-1] are bitmasks: bit (i-1) set <=> i in S.
using RankMask = std::uint32_t;

// Subsets of a vertex set, bit v set <=> canonical vertex v is a member.
using VertexMask = std::uint32_t;

using Composition = std::vector<int>;  // positive parts, nonempty
using Partition = std::vector<int>;    // weakly decreasing positive parts

// Thrown when an enumeration would exceed its configured degree guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kPermutationGuard = 12;
inline constexpr int kSetPartitionGuard = 10;

// A bijection from positions 0..n-1 (canonical vertex indices) onto the
// labels 1..n.  Doubles as a labeling pi: V -> [n] of an abstract vertex set.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  // Label of position/vertex v (0-based position, 1-based label).
  int operator[](int v) const { return img_[v]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  // (this o g): v -> this[g[v] - 1].
  Permutation compose(const Permutation& g) const;

  // { i in [n-1] : pi(i) > pi(i+1) } as a bitmask.
  RankMask descent_set() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Rank in lexicographic order of all n! permutations (0-based).
  std::uint64_t lex_rank() const;

 private:
  std::vector<int> img_;
};

// Standard bijection between subsets of [n-1] and compositions of n.
Composition comp_of_subset(RankMask s, int n);
RankMask subset_of_comp(const Composition& c);

std::vector<int> ranks_of(RankMask s, int n);
RankMask mask_of_ranks(std::span<const int> ranks, int n);

// Cumulative block sizes of an ordered set partition, excluding n.
RankMask boundary_set(std::span<const VertexMask> blocks);
RankMask boundary_set_sizes(std::span<const int> block_sizes);

// All n! permutations in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f, int guard = kPermutationGuard) {
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  if (n > guard)
    throw GuardError("permutation enumeration guard exceeded: n = " +
                     std::to_string(n));
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  do {
    f(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
}

// All ordered set partitions of the n-element vertex set {0,..,n-1}; the
// visitor receives the blocks as vertex masks.  First blocks are chosen in
// ascending mask order, so the overall order is deterministic.
template <class F>
void for_each_ordered_set_partition(int n, F&& f,
                                    int guard = kSetPartitionGuard) {
  if (n < 1) throw std::invalid_argument("vertex set must be nonempty");
  if (n > guard)
    throw GuardError("ordered set partition guard exceeded: n = " +
                     std::to_string(n));
  std::vector<VertexMask> blocks;
  blocks.reserve(n);
  auto rec = [&](auto&& self, VertexMask rest) -> void {
    if (rest == 0) {
      f(std::span<const VertexMask>(blocks));
      return;
    }
    VertexMask sub = 0;
    do {
      sub = (sub - rest) & rest;  // next nonempty submask, ascending
      blocks.push_back(sub);
      self(self, rest & ~sub);
      blocks.pop_back();
    } while (sub != rest);
  };
  rec(rec, (VertexMask{1} << n) - 1);
}

// Weak ascent chain test: values[pi^{-1}(1)] <= ... <= values[pi^{-1}(n)]
// with strict inequality exactly where `strict` has a bit set.
bool satisfies_ascent_chain(const Permutation& pi, RankMask strict,
                            std::span<const int> values);

constexpr bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hypercsf
