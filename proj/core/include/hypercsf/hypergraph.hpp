#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercsf/combinatorics.hpp"

namespace hypercsf {

struct Classification {
  bool connected = false;
  bool linear = false;
  bool hypertree = false;
};

// Vertex set plus a family of edges, each an arbitrary vertex subset of size
// >= 2.  Vertices are canonically indexed by their position in the label
// list; all library operations speak canonical indices, labels only matter
// at the file-format boundary.
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> labels,
             std::vector<std::vector<int>> edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& edge(int i) const { return edges_[i]; }
  VertexMask edge_mask(int i) const { return masks_[i]; }
  const std::vector<VertexMask>& edge_masks() const { return masks_; }

  Classification classify() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> edges_;  // sorted canonical indices
  std::vector<VertexMask> masks_;
};

// Alternating vertex/edge sequence v_1, e_{j_1}, v_2, ..., e_{j_l}, v_{l+1};
// edge entries are positions in the hypertree's edge order.
struct HyperPath {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// Leaf-edge ordering: repeatedly peel an edge meeting the union of the
// remaining ones in <= 1 vertex (lowest original index first) and place it
// in the last open slot.  Fails unless the input is a hypertree.
std::vector<int> leaf_edge_ordering(const Hypergraph& h);

// True iff |(e_{o_1} u ... u e_{o_i}) n e_{o_{i+1}}| = 1 for every prefix.
bool verify_ordering(const Hypergraph& h, const std::vector<int>& order);

// Ascending-index cycle v_1 -> v_2 -> ... -> v_m -> v_1 for every edge.
std::vector<std::vector<int>> default_cycles(const Hypergraph& h);

// A validated hypertree carrying a leaf-edge ordering and one cyclic order
// per edge.  Edges are re-indexed internally so that position p holds the
// (p+1)-th edge of the ordering; original indices remain queryable.
class Hypertree {
 public:
  // `order` and `cycles` are given in terms of original edge indices;
  // `cycles[i]` lists edge i's vertices in cyclic sequence.
  Hypertree(Hypergraph base, std::vector<int> order,
            std::vector<std::vector<int>> cycles);

  static Hypertree with_defaults(Hypergraph base);

  const Hypergraph& base() const { return base_; }
  int vertex_count() const { return base_.vertex_count(); }
  int edge_count() const { return base_.edge_count(); }

  const std::vector<int>& edge_order() const { return order_; }
  int original_index(int pos) const { return order_[pos]; }
  const std::vector<int>& edge_at(int pos) const { return everts_[pos]; }
  VertexMask edge_mask_at(int pos) const { return emasks_[pos]; }
  const std::vector<int>& cycle_at(int pos) const { return cycles_[pos]; }

  // c_{pos}(v); v must belong to the edge at `pos`.
  int cycle_next(int pos, int v) const { return cnext_[pos][v]; }

  HyperPath unique_path(int x, int y) const;

  // Minimum-ordered-index edge on the unique x->y path with its two
  // flanking path vertices (in path direction).
  struct PathStep {
    int edge_pos;
    int from;
    int to;
  };
  PathStep min_edge_on_path(int x, int y) const;

  // Cycle images (c_j(from), c_j(to)) of the flanking vertices, j the
  // minimum edge; a labeling has an H-descent at i exactly when its label
  // of `first` exceeds its label of `second` for (x, y) = inverse images
  // of (i, i+1).  Precomputed for all ordered pairs.
  struct DescentProbe {
    int first;
    int second;
  };
  const DescentProbe& descent_probe(int x, int y) const {
    return probes_[static_cast<size_t>(x) * base_.vertex_count() + y];
  }

 private:
  Hypergraph base_;
  std::vector<int> order_;                  // position -> original index
  std::vector<std::vector<int>> everts_;    // reordered edges
  std::vector<VertexMask> emasks_;
  std::vector<std::vector<int>> cycles_;    // reordered cyclic sequences
  std::vector<std::vector<int>> cnext_;     // per position: v -> c(v)
  std::vector<PathStep> steps_;             // n*n
  std::vector<DescentProbe> probes_;        // n*n
};

// Grows a hypertree on n vertices by repeatedly attaching a fresh edge at
// one existing vertex; edge sizes are drawn from `sizes`.  Deterministic for
// a fixed seed.  Fails when n is not reachable with the given sizes.
Hypertree random_hypertree(int n, const std::vector<int>& sizes,
                           std::uint64_t seed);

}  // namespace hypercsf
