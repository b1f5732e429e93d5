#include "hypercsf/poset.hpp"

#include <algorithm>

namespace hypercsf {

TotalOrder::TotalOrder(std::vector<int> ascending) : seq_(std::move(ascending)) {
  if (seq_.empty()) throw std::invalid_argument("empty total order");
  int maxv = 0;
  for (int v : seq_) {
    if (v < 0) throw std::invalid_argument("negative vertex in total order");
    maxv = std::max(maxv, v);
  }
  if (maxv > 30) throw std::invalid_argument("vertex index too large");
  rank_.assign(static_cast<size_t>(maxv) + 1, 0);
  for (size_t i = 0; i < seq_.size(); ++i) {
    const int v = seq_[i];
    if (rank_[v] != 0) throw std::invalid_argument("repeated vertex in total order");
    rank_[v] = static_cast<int>(i) + 1;
    members_ |= VertexMask{1} << v;
  }
}

int TotalOrder::rank(int v) const {
  if (!contains(v)) throw std::invalid_argument("vertex not in total order");
  return rank_[v];
}

Permutation TotalOrder::as_permutation() const {
  const int m = size();
  std::vector<int> line(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) line[v] = rank(v);
  return Permutation(std::move(line));
}

FinitePoset::FinitePoset(int n) : n_(n) {
  if (n < 1 || n > 31) throw std::invalid_argument("poset size out of range");
  above_.assign(static_cast<size_t>(n), 0);
  below_.assign(static_cast<size_t>(n), 0);
}

FinitePoset FinitePoset::from_relations(
    int n, std::span<const std::pair<int, int>> relations) {
  FinitePoset p(n);
  for (auto [x, y] : relations) {
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw std::invalid_argument("relation element out of range");
    if (x == y) throw std::invalid_argument("irreflexivity violated");
    p.above_[x] |= std::uint32_t{1} << y;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (p.above_[x] >> k & 1u) p.above_[x] |= p.above_[k];
  for (int x = 0; x < n; ++x)
    if (p.above_[x] >> x & 1u)
      throw std::invalid_argument("relation closure has a cycle through element " +
                                  std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.above_[x] >> y & 1u) p.below_[y] |= std::uint32_t{1} << x;
  return p;
}

std::vector<Permutation> FinitePoset::linear_extensions(int guard) const {
  std::vector<Permutation> out;
  for_each_linear_extension([&](const Permutation& pi) { out.push_back(pi); },
                            guard);
  return out;
}

FinitePoset poset_from_edge_orders(const Hypertree& t,
                                   const std::vector<TotalOrder>& orders) {
  const int k = t.edge_count();
  if (static_cast<int>(orders.size()) != k)
    throw std::invalid_argument("one total order per edge required");
  std::vector<std::pair<int, int>> rels;
  for (int pos = 0; pos < k; ++pos) {
    if (orders[pos].members() != t.edge_mask_at(pos))
      throw std::invalid_argument("total order does not match its edge");
    const auto& seq = orders[pos].ascending();
    for (size_t i = 1; i < seq.size(); ++i) rels.emplace_back(seq[i - 1], seq[i]);
  }
  return FinitePoset::from_relations(t.vertex_count(), rels);
}

bool is_p_omega_partition(const FinitePoset& p, const TotalOrder& omega,
                          std::span<const int> coloring) {
  const int n = p.size();
  if (static_cast<int>(coloring.size()) != n)
    throw std::invalid_argument("coloring size mismatch");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      if (omega.less(x, y)) {
        if (coloring[x] > coloring[y]) return false;
      } else {
        if (coloring[x] >= coloring[y]) return false;
      }
    }
  return true;
}

bool fundamental_theorem_check(const FinitePoset& p, const TotalOrder& omega,
                               int maxcolor) {
  const int n = p.size();
  if (n > 6 || maxcolor > 6)
    throw GuardError("fundamental_theorem_check is desk-scale (n, maxcolor <= 6)");
  const Permutation w = omega.as_permutation();

  std::vector<Permutation> exts = p.linear_extensions();
  std::vector<RankMask> strict;
  strict.reserve(exts.size());
  for (const auto& pi : exts)
    strict.push_back(w.compose(pi.inverse()).descent_set());

  std::vector<int> color(static_cast<size_t>(n), 1);
  for (;;) {
    int cells = 0;
    for (size_t j = 0; j < exts.size(); ++j)
      if (satisfies_ascent_chain(exts[j], strict[j], color)) ++cells;
    const bool member = is_p_omega_partition(p, omega, color);
    if (member ? cells != 1 : cells != 0) return false;
    int i = 0;
    while (i < n && color[i] == maxcolor) color[i++] = 1;
    if (i == n) break;
    ++color[i];
  }
  return true;
}

TotalOrder insertion(const TotalOrder& u, const TotalOrder& v) {
  const VertexMask shared = u.members() & v.members();
  if (std::popcount(shared) != 1)
    throw std::invalid_argument("insertion requires exactly one shared element");
  const int x = std::countr_zero(shared);
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(u.size() + v.size() - 1));
  for (int w : u.ascending()) {
    if (w == x)
      seq.insert(seq.end(), v.ascending().begin(), v.ascending().end());
    else
      seq.push_back(w);
  }
  return TotalOrder(std::move(seq));
}

TotalOrder fold_insertion(const Hypertree& t,
                          const std::vector<TotalOrder>& orders) {
  const int k = t.edge_count();
  if (static_cast<int>(orders.size()) != k)
    throw std::invalid_argument("one total order per edge required");
  if (k == 0) return TotalOrder({0});  // single-vertex hypertree
  for (int pos = 0; pos < k; ++pos)
    if (orders[pos].members() != t.edge_mask_at(pos))
      throw std::invalid_argument("total order does not match its edge");
  TotalOrder acc = orders[0];
  for (int pos = 1; pos < k; ++pos) acc = insertion(acc, orders[pos]);
  return acc;
}

bool path_comparison_check(const Hypertree& t,
                           const std::vector<TotalOrder>& orders) {
  const TotalOrder omega = fold_insertion(t, orders);
  const int n = t.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto st = t.min_edge_on_path(x, y);
      if (omega.less(x, y) != orders[st.edge_pos].less(st.from, st.to))
        return false;
    }
  return true;
}

}  // namespace hypercsf
