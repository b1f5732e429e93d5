#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercsf/assignment.hpp"
#include "hypercsf/combinatorics.hpp"
#include "hypercsf/hypergraph.hpp"
#include "hypercsf/qsym.hpp"

namespace hypercsf {

using Coloring = std::vector<int>;  // vertex -> positive color
using Word = std::vector<int>;      // coloring of {0..n-1} read in order

// Monomial-basis chromatic symmetric function: the coefficient of M_alpha
// counts ordered set partitions with block sizes alpha in which no edge
// lies inside a block.
QSymM oracle_m_expansion(const Hypergraph& h, int guard = kSetPartitionGuard);

// Independent power-sum oracle by inclusion-exclusion over edge subsets:
// X_H = sum_{S <= E} (-1)^{|S|} p_{lambda(S)} with lambda(S) the component
// sizes of (V, S).
SymExpansion oracle_p_expansion(const Hypergraph& h, int max_edges = 20);

// Cyclic standardization: ranks the rotations of a nonconstant prime-length
// word lexicographically.
Permutation cstd(const Word& w);

// Membership in A(pi, S): weakly increasing colors along pi^{-1} with
// strict rises exactly at S.
bool in_A(const Permutation& pi, RankMask s, const Coloring& chi);

// sum over all pi in S_n of F_{Des(pi c pi^{-1})}; the F-expansion of
// p_1^n - p_n for prime n.  `cycle_next[v]` is c(v) on vertices 0..n-1;
// defaults to the ascending cycle.
QSymF single_edge_f_expansion(int n, int guard = kPermutationGuard);
QSymF single_edge_f_expansion(int n, const std::vector<int>& cycle_next,
                              int guard = kPermutationGuard);

// Exhaustively checks that the nonconstant words over [maxcolor] fall into
// exactly one cell A(pi, Des(pi c pi^{-1})) each, and that the covering pi
// is cstd(w).
bool verify_single_edge_partition(int n, int maxcolor);

// H-descents of a labeling: i is a descent when the minimum-index edge on
// the unique path from pi^{-1}(i) to pi^{-1}(i+1) maps its flanking path
// vertices to labels in decreasing order.
RankMask h_descents(const Hypertree& t, const Permutation& pi);

// X_H = sum over labelings of F at the H-descent set; requires prime edge
// sizes.
QSymF theorem_f_expansion(const Hypertree& t, int guard = kSetPartitionGuard);

// Same sum computed through per-edge total orders x < y iff pi(c(x)) <
// pi(c(y)), folded by insertion; term-by-term equal to the H-descent form.
QSymF corollary_f_expansion(const Hypertree& t, int guard = kSetPartitionGuard);

// Expansion driven by per-size coloring-partition assignments; prime sizes
// fall back to the cyclic-descent assignment when absent.
QSymF generalized_f_expansion(
    const Hypertree& t, const std::map<int, PartitionAssignment>& assignments,
    int guard = kSetPartitionGuard);

struct RouteOutcome {
  std::string name;
  bool ran = false;
  std::string note;  // skip reason when !ran
};

struct VerifyReport {
  int degree = 0;
  Classification classification;
  std::vector<RouteOutcome> routes;
  bool agree = true;
  std::vector<int> mismatch_subset;  // first differing F-index, when !agree
  std::string mismatch_pair;
  Positivity f_positivity;  // of the reference oracle expansion
  Int coefficient_sum;      // always n! for a chromatic symmetric function
  QSymF reference{1};
};

// Runs every applicable expansion route and cross-checks them against the
// ordered-set-partition oracle with exact integer equality.
VerifyReport verify_routes(
    const Hypergraph& h,
    const std::map<int, PartitionAssignment>& assignments = {},
    int guard = kSetPartitionGuard);

}  // namespace hypercsf
