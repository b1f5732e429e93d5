#include "hypercsf/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>

namespace hypercsf {

Hypergraph::Hypergraph(std::vector<std::string> labels,
                       std::vector<std::vector<int>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const int n = vertex_count();
  if (n < 1) throw std::invalid_argument("hypergraph needs >= 1 vertex");
  if (n > 31) throw std::invalid_argument("at most 31 vertices supported");
  {
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != n)
      throw std::invalid_argument("duplicate vertex labels");
  }
  std::set<VertexMask> seen;
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2)
      throw std::invalid_argument("edge of size < 2 rejected");
    VertexMask m = 0;
    for (int v : e) {
      if (v < 0 || v >= n) throw std::invalid_argument("edge vertex out of range");
      if (m >> v & 1u) throw std::invalid_argument("repeated vertex in edge");
      m |= VertexMask{1} << v;
    }
    if (!seen.insert(m).second)
      throw std::invalid_argument("duplicate edge");
    masks_.push_back(m);
  }
}

Classification Hypergraph::classify() const {
  const int n = vertex_count();
  const int k = edge_count();
  Classification c;

  // connectivity over the vertex-edge incidence structure
  std::vector<char> vis(static_cast<size_t>(n), 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int i = 0; i < k; ++i) {
      if (!(masks_[i] >> u & 1u)) continue;
      for (int w : edges_[i])
        if (!vis[w]) {
          vis[w] = 1;
          ++reached;
          q.push_back(w);
        }
    }
  }
  c.connected = reached == n;

  c.linear = true;
  for (int i = 0; i < k && c.linear; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::popcount(masks_[i] & masks_[j]) > 1) {
        c.linear = false;
        break;
      }

  // acyclicity of the bipartite incidence graph: for a connected hypergraph
  // this reduces to sum(|e| - 1) = n - 1
  int slack = 0;
  for (int i = 0; i < k; ++i) slack += static_cast<int>(edges_[i].size()) - 1;
  c.hypertree = c.connected && slack == n - 1;
  return c;
}

std::vector<int> leaf_edge_ordering(const Hypergraph& h) {
  if (!h.classify().hypertree)
    throw std::invalid_argument("leaf_edge_ordering: not a hypertree");
  const int k = h.edge_count();
  std::vector<int> order(static_cast<size_t>(k));
  std::vector<char> removed(static_cast<size_t>(k), 0);
  for (int slot = k - 1; slot >= 0; --slot) {
    int leaf = -1;
    for (int i = 0; i < k && leaf < 0; ++i) {
      if (removed[i]) continue;
      VertexMask others = 0;
      for (int j = 0; j < k; ++j)
        if (!removed[j] && j != i) others |= h.edge_mask(j);
      if (std::popcount(h.edge_mask(i) & others) <= 1) leaf = i;
    }
    if (leaf < 0)
      throw std::invalid_argument("leaf_edge_ordering: no leaf edge found");
    removed[leaf] = 1;
    order[slot] = leaf;
  }
  return order;
}

bool verify_ordering(const Hypergraph& h, const std::vector<int>& order) {
  const int k = h.edge_count();
  if (static_cast<int>(order.size()) != k) return false;
  std::vector<char> used(static_cast<size_t>(k), 0);
  for (int i : order) {
    if (i < 0 || i >= k || used[i]) return false;
    used[i] = 1;
  }
  if (k <= 1) return true;
  VertexMask prefix = h.edge_mask(order[0]);
  for (int i = 1; i < k; ++i) {
    if (std::popcount(prefix & h.edge_mask(order[i])) != 1) return false;
    prefix |= h.edge_mask(order[i]);
  }
  return true;
}

std::vector<std::vector<int>> default_cycles(const Hypergraph& h) {
  std::vector<std::vector<int>> out;
  out.reserve(h.edge_count());
  for (int i = 0; i < h.edge_count(); ++i) out.push_back(h.edge(i));
  return out;
}

Hypertree::Hypertree(Hypergraph base, std::vector<int> order,
                     std::vector<std::vector<int>> cycles)
    : base_(std::move(base)), order_(std::move(order)) {
  const int n = base_.vertex_count();
  const int k = base_.edge_count();
  if (!base_.classify().hypertree)
    throw std::invalid_argument("hypertree: base fails hypertree test");
  if (!verify_ordering(base_, order_))
    throw std::invalid_argument("hypertree: edge order violates the leaf-edge condition");
  if (static_cast<int>(cycles.size()) != k)
    throw std::invalid_argument("hypertree: one cycle per edge required");

  everts_.resize(k);
  emasks_.resize(k);
  cycles_.resize(k);
  cnext_.assign(k, std::vector<int>(static_cast<size_t>(n), -1));
  for (int pos = 0; pos < k; ++pos) {
    const int orig = order_[pos];
    everts_[pos] = base_.edge(orig);
    emasks_[pos] = base_.edge_mask(orig);
    const auto& cyc = cycles[orig];
    VertexMask covered = 0;
    for (int v : cyc) {
      if (v < 0 || v >= n || (covered >> v & 1u))
        throw std::invalid_argument("hypertree: cycle is not a permutation of its edge");
      covered |= VertexMask{1} << v;
    }
    if (covered != emasks_[pos])
      throw std::invalid_argument("hypertree: cycle does not match its edge");
    cycles_[pos] = cyc;
    for (size_t t = 0; t < cyc.size(); ++t)
      cnext_[pos][cyc[t]] = cyc[(t + 1) % cyc.size()];
  }

  // all-pairs unique paths: one BFS per source over the incidence structure
  steps_.assign(static_cast<size_t>(n) * n, PathStep{-1, -1, -1});
  probes_.assign(static_cast<size_t>(n) * n, DescentProbe{-1, -1});
  std::vector<int> prev_vertex(static_cast<size_t>(n));
  std::vector<int> prev_edge(static_cast<size_t>(n));
  for (int src = 0; src < n; ++src) {
    std::fill(prev_vertex.begin(), prev_vertex.end(), -1);
    std::fill(prev_edge.begin(), prev_edge.end(), -1);
    prev_vertex[src] = src;
    std::deque<int> q{src};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int pos = 0; pos < k; ++pos) {
        if (!(emasks_[pos] >> u & 1u)) continue;
        for (int w : everts_[pos])
          if (prev_vertex[w] < 0) {
            prev_vertex[w] = u;
            prev_edge[w] = pos;
            q.push_back(w);
          }
      }
    }
    for (int dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      // walk back from dst, tracking the minimum edge position and flanks
      int best = k;
      int bf = -1, bt = -1;
      for (int v = dst; v != src;) {
        const int pu = prev_vertex[v];
        const int pe = prev_edge[v];
        if (pe < best) {
          best = pe;
          bf = pu;  // path direction src -> dst
          bt = v;
        }
        v = pu;
      }
      auto& st = steps_[static_cast<size_t>(src) * n + dst];
      st = PathStep{best, bf, bt};
      probes_[static_cast<size_t>(src) * n + dst] =
          DescentProbe{cnext_[best][bf], cnext_[best][bt]};
    }
  }
}

Hypertree Hypertree::with_defaults(Hypergraph base) {
  auto order = leaf_edge_ordering(base);
  auto cycles = default_cycles(base);
  return Hypertree(std::move(base), std::move(order), std::move(cycles));
}

HyperPath Hypertree::unique_path(int x, int y) const {
  const int n = base_.vertex_count();
  if (x == y) throw std::invalid_argument("unique_path: endpoints coincide");
  if (x < 0 || y < 0 || x >= n || y >= n)
    throw std::invalid_argument("unique_path: vertex out of range");
  const int k = base_.edge_count();
  std::vector<int> prev_vertex(static_cast<size_t>(n), -1);
  std::vector<int> prev_edge(static_cast<size_t>(n), -1);
  prev_vertex[x] = x;
  std::deque<int> q{x};
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int pos = 0; pos < k; ++pos) {
      if (!(emasks_[pos] >> u & 1u)) continue;
      for (int w : everts_[pos])
        if (prev_vertex[w] < 0) {
          prev_vertex[w] = u;
          prev_edge[w] = pos;
          q.push_back(w);
        }
    }
  }
  HyperPath p;
  for (int v = y; v != x; v = prev_vertex[v]) {
    p.vertices.push_back(v);
    p.edges.push_back(prev_edge[v]);
  }
  p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

Hypertree::PathStep Hypertree::min_edge_on_path(int x, int y) const {
  if (x == y) throw std::invalid_argument("min_edge_on_path: endpoints coincide");
  return steps_[static_cast<size_t>(x) * base_.vertex_count() + y];
}

Hypertree random_hypertree(int n, const std::vector<int>& sizes,
                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_hypertree: n must be >= 1");
  for (int s : sizes)
    if (s < 2) throw std::invalid_argument("random_hypertree: edge sizes must be >= 2");
  // reachable vertex counts: sums of (size - 1) hitting n - 1
  std::vector<char> reach(static_cast<size_t>(n), 0);
  reach[0] = 1;
  for (int r = 1; r < n; ++r)
    for (int s : sizes)
      if (r - (s - 1) >= 0 && reach[r - (s - 1)]) {
        reach[r] = 1;
        break;
      }
  if (!reach[n - 1])
    throw std::invalid_argument("random_hypertree: n unreachable with the given edge sizes");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> edges;
  int have = 1;  // grow from a single root vertex
  while (have < n) {
    std::vector<int> feasible;
    for (int s : sizes)
      if (have + s - 1 <= n && reach[n - (have + s - 1)]) feasible.push_back(s);
    const int s = feasible[static_cast<size_t>(
        std::uniform_int_distribution<int>(0, static_cast<int>(feasible.size()) - 1)(rng))];
    const int attach = std::uniform_int_distribution<int>(0, have - 1)(rng);
    std::vector<int> e{attach};
    for (int t = 0; t < s - 1; ++t) e.push_back(have++);
    edges.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  return Hypertree::with_defaults(Hypergraph(std::move(labels), std::move(edges)));
}

}  // namespace hypercsf
