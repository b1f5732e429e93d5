#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercsf/combinatorics.hpp"

namespace hypercsf {

// Ordered set partition with >= 2 blocks: a face of the braid-arrangement
// (type A) Coxeter complex, identified with a nonconstant coloring pattern.
struct Face {
  std::vector<VertexMask> blocks;
  RankMask boundary = 0;

  explicit Face(std::vector<VertexMask> bs);
};

// A choice of rank subset S(pi) for every permutation pi of [n], encoding a
// candidate partition of the nonconstant colorings of an n-set into the
// cells A(pi, S(pi)).  Rows are indexed by the lexicographic rank of pi.
class PartitionAssignment {
 public:
  PartitionAssignment(int n, std::vector<RankMask> table);

  int degree() const { return n_; }
  RankMask at_rank(std::uint64_t lex_rank) const { return table_[lex_rank]; }
  RankMask at(const Permutation& pi) const { return table_[pi.lex_rank()]; }
  const std::vector<RankMask>& table() const { return table_; }

  bool operator==(const PartitionAssignment&) const = default;

 private:
  int n_;
  std::vector<RankMask> table_;
};

// The permutations listing the face's blocks contiguously and in order;
// there are prod |B_j|! of them.
std::vector<Permutation> compatible_facets(const Face& f);

// S(pi) = Des(pi c pi^{-1}) for the ascending cycle c; a valid assignment
// exactly when n is prime.
PartitionAssignment cyclic_descent_assignment(int n);

// True iff every nonconstant coloring pattern is captured by exactly one
// cell: every face has exactly one compatible facet pi with S(pi) inside
// the face's boundary set, and no S(pi) is empty (an empty S would capture
// the constant colorings as well).
bool verify_assignment(const PartitionAssignment& a);

struct SearchResult {
  enum class Status { found, none_exists, budget_exceeded };
  Status status = Status::none_exists;
  std::optional<PartitionAssignment> assignment;
  std::uint64_t nodes = 0;
};

// Exact-cover backtracking over candidate (pi, S) rows; each row covers the
// faces compatible with pi whose boundary contains S.  Deterministic:
// candidates per facet are ordered by popcount then value, facets are
// chosen fail-first with lexicographic tie-break.
SearchResult search_assignment(int n, std::uint64_t node_budget = 1'000'000);

}  // namespace hypercsf
