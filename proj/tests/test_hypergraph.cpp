#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypercsf/hypergraph.hpp"
#include "test_util.hpp"

using namespace hypercsf;
using testutil::hg;
using testutil::ht;

TEST_CASE("classification of the running examples") {
  {
    const auto c = hg(4, {{1, 2, 3}, {2, 3, 4}}).classify();
    CHECK(c.connected);
    CHECK_FALSE(c.linear);
    CHECK_FALSE(c.hypertree);
  }
  {
    const auto c = hg(5, {{1, 2, 3}, {3, 4, 5}}).classify();
    CHECK(c.connected);
    CHECK(c.linear);
    CHECK(c.hypertree);
  }
  {
    const auto c = hg(4, {{1, 2}, {3, 4}}).classify();
    CHECK_FALSE(c.connected);
    CHECK_FALSE(c.hypertree);
  }
  {
    // single vertex, no edges
    const auto c = Hypergraph({"a"}, {}).classify();
    CHECK(c.connected);
    CHECK(c.linear);
    CHECK(c.hypertree);
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(hg(3, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(hg(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(hg(3, {{1, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(hg(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("leaf edge ordering") {
  {
    const auto h = hg(3, {{1, 2, 3}});
    CHECK(leaf_edge_ordering(h) == std::vector<int>{0});
  }
  {
    // star of three triangles sharing vertex 1: index-sorted order passes
    const auto h = hg(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
    const auto order = leaf_edge_ordering(h);
    CHECK(order == std::vector<int>{0, 1, 2});
    CHECK(verify_ordering(h, order));
  }
  {
    // 3-edge path of triples
    const auto h = hg(7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}});
    CHECK(verify_ordering(h, leaf_edge_ordering(h)));
  }
  CHECK_THROWS_AS(leaf_edge_ordering(hg(4, {{1, 2, 3}, {2, 3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("verify_ordering examples") {
  const auto h = hg(5, {{1, 2, 3}, {3, 4, 5}});
  CHECK(verify_ordering(h, {0, 1}));
  CHECK(verify_ordering(h, {1, 0}));
  CHECK_FALSE(verify_ordering(hg(4, {{1, 2}, {3, 4}}), {0, 1}));
  CHECK_FALSE(verify_ordering(hg(4, {{1, 2, 3}, {2, 3, 4}}), {0, 1}));
  CHECK_FALSE(verify_ordering(h, {0, 0}));
  CHECK_FALSE(verify_ordering(h, {0}));
}

TEST_CASE("ordering characterizes hypertrees on exhaustive small hypergraphs") {
  // every hypergraph with <= 3 edges on <= 5 vertices: some order passes
  // verify_ordering iff the hypergraph is a connected hypertree covering V
  const int n = 5;
  std::vector<std::vector<int>> all_edges;
  for (VertexMask m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) < 2) continue;
    std::vector<int> e;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1u) e.push_back(v + 1);
    all_edges.push_back(e);
  }
  const int ne = static_cast<int>(all_edges.size());
  int trees = 0;
  for (int i = 0; i < ne; ++i)
    for (int j = i; j < ne; ++j)
      for (int k = j; k < ne; ++k) {
        std::set<std::vector<int>> es{all_edges[i], all_edges[j], all_edges[k]};
        std::vector<std::vector<int>> edges(es.begin(), es.end());
        VertexMask covered = 0;
        for (const auto& e : edges)
          for (int v : e) covered |= VertexMask{1} << (v - 1);
        if (covered != (1u << n) - 1) continue;  // stray isolated vertices
        const auto h = hg(n, std::vector<std::vector<int>>(edges));
        std::vector<int> order(edges.size());
        for (size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
        std::sort(order.begin(), order.end());
        bool any = false;
        do {
          any |= verify_ordering(h, order);
        } while (!any && std::next_permutation(order.begin(), order.end()));
        CHECK(any == h.classify().hypertree);
        trees += any;
      }
  CHECK(trees > 0);
}

TEST_CASE("default cycles follow ascending canonical order") {
  const auto h = hg(5, {{1, 2, 3}, {3, 4, 5}});
  const auto cyc = default_cycles(h);
  CHECK(cyc[0] == std::vector<int>{0, 1, 2});
  CHECK(cyc[1] == std::vector<int>{2, 3, 4});
  const auto t = Hypertree::with_defaults(h);
  CHECK(t.cycle_next(0, 2) == 0);
  CHECK(t.cycle_next(1, 4) == 2);
}

TEST_CASE("unique paths") {
  const auto t = ht(5, {{1, 2, 3}, {3, 4, 5}});
  {
    const auto p = t.unique_path(0, 1);  // same edge
    CHECK(p.vertices == std::vector<int>{0, 1});
    REQUIRE(p.edges.size() == 1);
    CHECK(t.original_index(p.edges[0]) == 0);
  }
  {
    const auto p = t.unique_path(0, 4);  // 1, e1, 3, e2, 5 in the labels
    CHECK(p.vertices == std::vector<int>{0, 2, 4});
    REQUIRE(p.edges.size() == 2);
    CHECK(t.original_index(p.edges[0]) == 0);
    CHECK(t.original_index(p.edges[1]) == 1);
  }
  CHECK_THROWS_AS(t.unique_path(2, 2), std::invalid_argument);
}

TEST_CASE("paths are unique: exhaustive alternating-path search") {
  // count all simple alternating paths between every vertex pair
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto t = random_hypertree(2 + static_cast<int>(seed % 5), {2, 3}, seed);
    const int n = t.vertex_count();
    const int k = t.edge_count();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        int found = 0;
        // DFS over (vertex, used-edge-set, used-vertex-set)
        auto rec = [&](auto&& self, int u, std::uint32_t eused,
                       VertexMask vused) -> void {
          if (u == y) {
            ++found;
            return;
          }
          for (int pos = 0; pos < k; ++pos) {
            if (eused >> pos & 1u) continue;
            if (!(t.edge_mask_at(pos) >> u & 1u)) continue;
            for (int w : t.edge_at(pos)) {
              if (vused >> w & 1u) continue;
              self(self, w, eused | (1u << pos),
                   vused | (VertexMask{1} << w));
            }
          }
        };
        rec(rec, x, 0, VertexMask{1} << x);
        REQUIRE(found == 1);
        const auto p = t.unique_path(x, y);
        REQUIRE(p.vertices.front() == x);
        REQUIRE(p.vertices.back() == y);
        for (size_t s = 0; s + 1 < p.vertices.size(); ++s) {
          const VertexMask em = t.edge_mask_at(p.edges[s]);
          REQUIRE((em >> p.vertices[s] & 1u));
          REQUIRE((em >> p.vertices[s + 1] & 1u));
        }
      }
  }
}

TEST_CASE("random hypertrees are hypertrees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 7);
    const auto t = random_hypertree(n, {2, 3}, seed);
    CHECK(t.vertex_count() == n);
    CHECK(t.base().classify().hypertree);
    CHECK(verify_ordering(t.base(), t.edge_order()));
  }
  // forced shapes
  const auto t3 = random_hypertree(3, {3}, 1);
  CHECK(t3.edge_count() == 1);
  const auto t5 = random_hypertree(5, {3}, 1);
  CHECK(t5.edge_count() == 2);
  CHECK_THROWS_AS(random_hypertree(4, {3}, 1), std::invalid_argument);
}

TEST_CASE("classification is invariant under canonical relabeling") {
  const std::vector<std::vector<int>> shapes[] = {
      {{1, 2, 3}, {3, 4, 5}},
      {{1, 2, 3}, {2, 3, 4}},
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}},
  };
  const int perm[] = {3, 5, 1, 2, 4};  // a fixed relabeling of 1..5
  for (const auto& shape : shapes) {
    auto relabeled = shape;
    for (auto& e : relabeled)
      for (auto& v : e) v = perm[v - 1];
    const auto a = hg(5, std::vector<std::vector<int>>(shape)).classify();
    const auto b = hg(5, std::move(relabeled)).classify();
    CHECK(a.connected == b.connected);
    CHECK(a.linear == b.linear);
    CHECK(a.hypertree == b.hypertree);
  }
}

TEST_CASE("hypertree constructor validates cycles") {
  auto h = hg(5, {{1, 2, 3}, {3, 4, 5}});
  const auto order = leaf_edge_ordering(h);
  CHECK_THROWS_AS(Hypertree(h, order, {{0, 1, 2}, {2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Hypertree(h, order, {{0, 1, 2}, {2, 3, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Hypertree(h, order, {{0, 1, 2}, {1, 3, 4}}),
                  std::invalid_argument);
  // an explicit non-default cycle is fine; cycles are given per original
  // edge index, so locate edge 0's position first
  const Hypertree t(h, order, {{0, 2, 1}, {2, 3, 4}});
  const int pos = t.original_index(0) == 0 ? 0 : 1;
  CHECK(t.cycle_next(pos, 0) == 2);
  CHECK(t.cycle_next(pos, 2) == 1);
}
