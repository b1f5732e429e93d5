#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypercsf/exact.hpp"
#include "hypercsf/hypergraph.hpp"
#include "hypercsf/poset.hpp"

namespace testutil {

// Hypergraph on labels "1".."n" from 1-based edge vertex lists.
inline hypercsf::Hypergraph hg(int n, std::vector<std::vector<int>> edges) {
  std::vector<std::string> labels;
  for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  for (auto& e : edges)
    for (auto& v : e) --v;
  return hypercsf::Hypergraph(std::move(labels), std::move(edges));
}

inline hypercsf::Hypertree ht(int n, std::vector<std::vector<int>> edges) {
  return hypercsf::Hypertree::with_defaults(hg(n, std::move(edges)));
}

// Fubini numbers by the recurrence a(n) = sum_k C(n,k) a(n-k); the
// independent oracle for ordered set partition counts.
inline std::vector<hypercsf::Int> fubini_upto(int n) {
  using hypercsf::Int;
  std::vector<Int> a(static_cast<size_t>(n) + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int s = 0;
    for (int k = 1; k <= m; ++k) s += hypercsf::binomial(m, k) * a[m - k];
    a[m] = s;
  }
  return a;
}

// Orders given per edge in any sequence, re-aligned to the hypertree's edge
// positions by member set.
inline std::vector<hypercsf::TotalOrder> align_orders(
    const hypercsf::Hypertree& t, std::vector<std::vector<int>> seqs) {
  std::vector<hypercsf::TotalOrder> out;
  for (int pos = 0; pos < t.edge_count(); ++pos) {
    const hypercsf::VertexMask want = t.edge_mask_at(pos);
    for (auto& s : seqs) {
      hypercsf::VertexMask got = 0;
      for (int v : s) got |= hypercsf::VertexMask{1} << v;
      if (got == want) {
        out.emplace_back(s);
        break;
      }
    }
  }
  return out;
}

// Arbitrary hypergraph (not necessarily a hypertree): random edges of size
// >= 2, deduplicated.
inline hypercsf::Hypergraph random_hypergraph(int n, int max_edges,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> edges;
  const int want = std::uniform_int_distribution<int>(1, max_edges)(rng);
  int attempts = 0;
  while (static_cast<int>(edges.size()) < want && attempts++ < 200) {
    const int size = std::uniform_int_distribution<int>(2, n)(rng);
    std::vector<int> pool(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) pool[v] = v + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> e(pool.begin(), pool.begin() + size);
    std::sort(e.begin(), e.end());
    edges.insert(std::move(e));
  }
  return hg(n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

}  // namespace testutil
