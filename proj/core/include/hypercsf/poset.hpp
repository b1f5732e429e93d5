#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypercsf/combinatorics.hpp"
#include "hypercsf/hypergraph.hpp"

namespace hypercsf {

// Total order on a subset of canonical vertices, stored as the member list
// in increasing order.
class TotalOrder {
 public:
  explicit TotalOrder(std::vector<int> ascending);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& ascending() const { return seq_; }
  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(rank_.size()) && rank_[v] > 0;
  }
  int rank(int v) const;  // 1-based
  bool less(int x, int y) const { return rank(x) < rank(y); }
  VertexMask members() const { return members_; }

  // The order as a bijection onto {1..m}; only meaningful when the member
  // set is exactly {0..m-1}.
  Permutation as_permutation() const;

  bool operator==(const TotalOrder&) const = default;

 private:
  std::vector<int> seq_;
  std::vector<int> rank_;
  VertexMask members_ = 0;
};

// Finite poset on elements {0..n-1}; comparability is kept as full
// reachability bitmasks, so queries are O(1).
class FinitePoset {
 public:
  explicit FinitePoset(int n);  // antichain

  // Transitive closure of the given strict relations; throws with a cycle
  // witness when the input is not acyclic.
  static FinitePoset from_relations(
      int n, std::span<const std::pair<int, int>> relations);

  int size() const { return n_; }
  bool less(int x, int y) const { return above_[x] >> y & 1u; }
  std::uint32_t strictly_above(int x) const { return above_[x]; }
  std::uint32_t strictly_below(int x) const { return below_[x]; }

  template <class F>
  void for_each_linear_extension(F&& f, int guard = kSetPartitionGuard) const {
    if (n_ > guard)
      throw GuardError("linear extension guard exceeded: n = " +
                       std::to_string(n_));
    std::vector<int> label(static_cast<size_t>(n_), 0);
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    auto rec = [&](auto&& self, std::uint32_t remaining, int next) -> void {
      if (remaining == 0) {
        f(Permutation(label));
        return;
      }
      for (int v = 0; v < n_; ++v) {
        if (!(remaining >> v & 1u)) continue;
        if (below_[v] & remaining) continue;  // some smaller element left
        label[v] = next;
        self(self, remaining & ~(std::uint32_t{1} << v), next + 1);
        label[v] = 0;
      }
    };
    rec(rec, all, 1);
  }

  std::vector<Permutation> linear_extensions(
      int guard = kSetPartitionGuard) const;

  bool operator==(const FinitePoset&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> above_;
  std::vector<std::uint32_t> below_;
};

// Union of the per-edge total orders, closed transitively (a poset for any
// hypertree input).
FinitePoset poset_from_edge_orders(const Hypertree& t,
                                   const std::vector<TotalOrder>& orders);

// Order-preserving map test with strictness where the poset and the
// labeling omega disagree; `coloring[v]` is the color of vertex v.
bool is_p_omega_partition(const FinitePoset& p, const TotalOrder& omega,
                          std::span<const int> coloring);

// Desk-scale exhaustive verification that the colorings with values in
// [maxcolor] that are (P,omega)-partitions are exactly the disjoint union
// of the cells A(pi, Des(omega o pi^{-1})) over linear extensions pi.
bool fundamental_theorem_check(const FinitePoset& p, const TotalOrder& omega,
                               int maxcolor);

// Splice v's member list into the slot of the one shared element of u.
TotalOrder insertion(const TotalOrder& u, const TotalOrder& v);

// Left fold of `insertion` along the hypertree's edge order; restricts to
// orders[pos] on every edge and extends the glued edge poset linearly.
TotalOrder fold_insertion(const Hypertree& t,
                          const std::vector<TotalOrder>& orders);

// Checks that the fold order compares any two vertices the way the
// minimum-index edge on their unique path does.
bool path_comparison_check(const Hypertree& t,
                           const std::vector<TotalOrder>& orders);

}  // namespace hypercsf
