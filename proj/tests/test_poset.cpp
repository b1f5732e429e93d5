#include <doctest.h>

#include <random>

#include "hypercsf/poset.hpp"
#include "test_util.hpp"

using namespace hypercsf;
using testutil::ht;

namespace {

std::vector<std::pair<int, int>> chain_pairs(std::initializer_list<int> vs) {
  std::vector<int> v(vs);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 1; i < v.size(); ++i) out.emplace_back(v[i - 1], v[i]);
  return out;
}

}  // namespace

TEST_CASE("poset construction and cycles") {
  const auto rels = chain_pairs({0, 1, 2});
  const auto p = FinitePoset::from_relations(3, rels);
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));

  std::vector<std::pair<int, int>> bad{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_WITH_AS(FinitePoset::from_relations(3, bad),
                       doctest::Contains("cycle"), std::invalid_argument);
}

TEST_CASE("poset from edge orders") {
  const auto t = ht(5, {{1, 2, 3}, {3, 4, 5}});
  // chains 1<2<3 and 5<4<3 (canonical indices 0<1<2, 4<3<2)
  const auto orders = testutil::align_orders(t, {{0, 1, 2}, {4, 3, 2}});
  const auto p = poset_from_edge_orders(t, orders);
  CHECK(p.less(0, 2));
  CHECK(p.less(4, 2));
  CHECK(p.less(0, 1));
  CHECK_FALSE(p.less(0, 4));
  CHECK_FALSE(p.less(4, 0));
  CHECK_FALSE(p.less(2, 0));

  // a union that is already a chain stays that chain
  const auto t2 = ht(3, {{1, 2}, {2, 3}});
  // edge order may permute the two edges; build orders by position
  std::vector<TotalOrder> chain_orders;
  for (int pos = 0; pos < 2; ++pos) chain_orders.push_back(TotalOrder(t2.edge_at(pos)));
  const auto p2 = poset_from_edge_orders(t2, chain_orders);
  CHECK(p2.less(0, 1));
  CHECK(p2.less(1, 2));
  CHECK(p2.less(0, 2));
}

TEST_CASE("linear extension counts") {
  CHECK(FinitePoset(4).linear_extensions().size() == 24);  // antichain
  const auto chain = FinitePoset::from_relations(4, chain_pairs({0, 1, 2, 3}));
  CHECK(chain.linear_extensions().size() == 1);
  std::vector<std::pair<int, int>> vee{{0, 2}, {1, 2}};
  CHECK(FinitePoset::from_relations(3, vee).linear_extensions().size() == 2);
}

TEST_CASE("linear extensions preserve order") {
  std::vector<std::pair<int, int>> rels{{0, 2}, {1, 2}, {1, 3}};
  const auto p = FinitePoset::from_relations(4, rels);
  for (const auto& pi : p.linear_extensions())
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (p.less(x, y)) CHECK(pi[x] < pi[y]);
}

TEST_CASE("(P,omega)-partition membership") {
  const auto chain = FinitePoset::from_relations(2, chain_pairs({0, 1}));
  const TotalOrder agree({0, 1});
  const TotalOrder disagree({1, 0});
  const std::vector<int> flat{1, 1};
  CHECK(is_p_omega_partition(chain, agree, flat));
  CHECK_FALSE(is_p_omega_partition(chain, disagree, flat));
  const std::vector<int> up{1, 2};
  CHECK(is_p_omega_partition(chain, disagree, up));

  // constant coloring with omega a linear extension: only weak constraints
  const auto p = FinitePoset::from_relations(3, chain_pairs({0, 1, 2}));
  CHECK(is_p_omega_partition(p, TotalOrder({0, 1, 2}), std::vector<int>{2, 2, 2}));
}

TEST_CASE("fundamental theorem desk checks") {
  const auto chain = FinitePoset::from_relations(3, chain_pairs({0, 1, 2}));
  CHECK(fundamental_theorem_check(chain, TotalOrder({0, 1, 2}), 3));
  CHECK(fundamental_theorem_check(chain, TotalOrder({2, 0, 1}), 3));

  const FinitePoset antichain(3);
  CHECK(fundamental_theorem_check(antichain, TotalOrder({0, 1, 2}), 3));
  CHECK(fundamental_theorem_check(antichain, TotalOrder({2, 1, 0}), 3));

  std::vector<std::pair<int, int>> vee{{0, 2}, {1, 2}};
  const auto p = FinitePoset::from_relations(3, vee);
  CHECK(fundamental_theorem_check(p, TotalOrder({0, 1, 2}), 4));
  CHECK(fundamental_theorem_check(p, TotalOrder({1, 0, 2}), 4));
  CHECK(fundamental_theorem_check(p, TotalOrder({2, 1, 0}), 4));
}

TEST_CASE("insertion splices at the shared element") {
  // U = x < b < y, V = a < b < c sharing b: x < a < b < c < y
  // canonical ids: x=0, b=1, y=2, a=3, c=4
  const TotalOrder u({0, 1, 2});
  const TotalOrder v({3, 1, 4});
  CHECK(insertion(u, v).ascending() == std::vector<int>{0, 3, 1, 4, 2});

  // singleton v leaves u unchanged
  CHECK(insertion(u, TotalOrder({1})).ascending() == u.ascending());
  // singleton u becomes v
  CHECK(insertion(TotalOrder({1}), v).ascending() == v.ascending());

  CHECK_THROWS_AS(insertion(TotalOrder({0, 1}), TotalOrder({2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(insertion(TotalOrder({0, 1}), TotalOrder({0, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("fold insertion restricts to the edge orders") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto t = random_hypertree(3 + static_cast<int>(seed % 6), {2, 3, 5}, seed);
    std::vector<TotalOrder> orders;
    for (int pos = 0; pos < t.edge_count(); ++pos) {
      auto seq = t.edge_at(pos);
      std::shuffle(seq.begin(), seq.end(), rng);
      orders.emplace_back(std::move(seq));
    }
    const TotalOrder omega = fold_insertion(t, orders);
    CHECK(omega.size() == t.vertex_count());
    for (int pos = 0; pos < t.edge_count(); ++pos) {
      const auto& seq = orders[pos].ascending();
      for (size_t i = 1; i < seq.size(); ++i)
        CHECK(omega.less(seq[i - 1], seq[i]));
    }
    // and is a linear extension of the glued poset
    const auto p = poset_from_edge_orders(t, orders);
    for (int x = 0; x < t.vertex_count(); ++x)
      for (int y = 0; y < t.vertex_count(); ++y)
        if (p.less(x, y)) CHECK(omega.less(x, y));
  }
}

TEST_CASE("two chains sharing a middle vertex merge by splicing") {
  const auto t = ht(5, {{1, 2, 3}, {3, 4, 5}});
  // per-edge chains 1 < 3 < 2 (canonical 0,2,1) and 4 < 3 < 5 (3,2,4);
  // whichever edge folds second is spliced into the shared vertex 3
  const auto orders = testutil::align_orders(t, {{0, 2, 1}, {3, 2, 4}});
  const TotalOrder omega = fold_insertion(t, orders);
  const std::vector<int> spliced_second = t.edge_mask_at(0) == 0b11100
                                              ? std::vector<int>{3, 0, 2, 1, 4}
                                              : std::vector<int>{0, 3, 2, 4, 1};
  CHECK(omega.ascending() == spliced_second);
}

TEST_CASE("path comparison check (single edge and random hypertrees)") {
  const auto single = ht(3, {{1, 2, 3}});
  CHECK(path_comparison_check(single, {TotalOrder({2, 0, 1})}));

  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 7);  // up to 9
    const auto t = random_hypertree(n, {2, 3, 5}, seed);
    std::vector<TotalOrder> orders;
    for (int pos = 0; pos < t.edge_count(); ++pos) {
      auto seq = t.edge_at(pos);
      std::shuffle(seq.begin(), seq.end(), rng);
      orders.emplace_back(std::move(seq));
    }
    CHECK(path_comparison_check(t, orders));
  }
}
