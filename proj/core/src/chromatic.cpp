#include "hypercsf/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hypercsf/poset.hpp"

namespace hypercsf {

namespace {

void require_prime_edges(const Hypertree& t) {
  for (int pos = 0; pos < t.edge_count(); ++pos)
    if (!is_prime(static_cast<int>(t.edge_at(pos).size())))
      throw std::invalid_argument("route requires prime edge sizes");
}

}  // namespace

QSymM oracle_m_expansion(const Hypergraph& h, int guard) {
  const int n = h.vertex_count();
  if (n > guard)
    throw GuardError("oracle guard exceeded: n = " + std::to_string(n));
  QSymM out(n);
  auto& dense = out.dense();
  const auto& edges = h.edge_masks();
  const VertexMask all = (VertexMask{1} << n) - 1;

  // ordered set partitions, pruning any block that swallows an edge
  auto rec = [&](auto&& self, VertexMask rest, RankMask bmask, int cum) -> void {
    if (rest == 0) {
      ++dense[bmask];
      return;
    }
    VertexMask sub = 0;
    do {
      sub = (sub - rest) & rest;
      bool proper = true;
      for (const VertexMask em : edges)
        if ((em | sub) == sub) {
          proper = false;
          break;
        }
      if (proper) {
        const int c = cum + std::popcount(sub);
        const VertexMask next = rest & ~sub;
        self(self, next,
             next ? bmask | (RankMask{1} << (c - 1)) : bmask, c);
      }
    } while (sub != rest);
  };
  rec(rec, all, 0, 0);
  return out;
}

SymExpansion oracle_p_expansion(const Hypergraph& h, int max_edges) {
  const int n = h.vertex_count();
  const int k = h.edge_count();
  if (k > max_edges)
    throw GuardError("power-sum oracle guard exceeded: 2^" + std::to_string(k) +
                     " edge subsets");
  SymExpansion out{n, SymBasis::power, {}};
  std::vector<int> parent(static_cast<size_t>(n));
  std::vector<int> size(static_cast<size_t>(n));
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << k); ++sub) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size.begin(), size.end(), 1);
    for (int e = 0; e < k; ++e) {
      if (!(sub >> e & 1u)) continue;
      const auto& vs = h.edge(e);
      for (size_t i = 1; i < vs.size(); ++i) {
        int a = find(vs[0]), b = find(vs[i]);
        if (a != b) {
          parent[b] = a;
          size[a] += size[b];
        }
      }
    }
    Partition lam;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) lam.push_back(size[v]);
    std::sort(lam.begin(), lam.end(), std::greater<>());
    if (std::popcount(sub) % 2 == 0)
      out.coeff[lam] += 1;
    else
      out.coeff[lam] -= 1;
  }
  out.prune();
  return out;
}

namespace {

// r_x(w) < r_y(w) lexicographically
bool rotation_less(const Word& w, int x, int y) {
  const int n = static_cast<int>(w.size());
  for (int t = 0; t < n; ++t) {
    const int a = w[(x + t) % n];
    const int b = w[(y + t) % n];
    if (a != b) return a < b;
  }
  return false;
}

}  // namespace

Permutation cstd(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (!is_prime(n))
    throw std::invalid_argument(
        "cstd requires prime length (rotations may collide otherwise)");
  bool constant = true;
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("word letters must be positive");
    constant &= x == w[0];
  }
  if (constant) throw std::invalid_argument("cstd requires a nonconstant word");
  std::vector<int> line(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int rank = 1;
    for (int j = 0; j < n; ++j)
      if (j != i && rotation_less(w, j, i)) ++rank;
    line[i] = rank;
  }
  return Permutation(std::move(line));
}

bool in_A(const Permutation& pi, RankMask s, const Coloring& chi) {
  return satisfies_ascent_chain(pi, s, chi);
}

QSymF single_edge_f_expansion(int n, int guard) {
  std::vector<int> cyc(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) cyc[v] = (v + 1) % n;
  return single_edge_f_expansion(n, cyc, guard);
}

QSymF single_edge_f_expansion(int n, const std::vector<int>& cycle_next,
                              int guard) {
  if (!is_prime(n))
    throw std::invalid_argument("single-edge expansion requires prime n");
  if (n > guard)
    throw GuardError("single-edge expansion guard exceeded");
  if (static_cast<int>(cycle_next.size()) != n)
    throw std::invalid_argument("cycle map size mismatch");
  QSymF out(n);
  auto& dense = out.dense();
  std::vector<int> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
    RankMask m = 0;
    // descents of pi c pi^{-1}
    int prev = pi[cycle_next[inv[0]]];
    for (int i = 1; i < n; ++i) {
      const int cur = pi[cycle_next[inv[i]]];
      if (prev > cur) m |= RankMask{1} << (i - 1);
      prev = cur;
    }
    ++dense[m];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

bool verify_single_edge_partition(int n, int maxcolor) {
  if (!is_prime(n) || n > 7)
    throw std::invalid_argument("verify_single_edge_partition: n in {2,3,5,7}");
  if (maxcolor < 2 || maxcolor > 7)
    throw std::invalid_argument("verify_single_edge_partition: maxcolor in 2..7");
  std::uint64_t pow = 1;
  for (int i = 0; i < n; ++i) pow *= static_cast<std::uint64_t>(maxcolor);

  std::vector<std::uint32_t> hits(pow, 0);
  std::vector<std::uint64_t> digit(static_cast<size_t>(n));  // maxcolor^v
  digit[0] = 1;
  for (int v = 1; v < n; ++v) digit[v] = digit[v - 1] * maxcolor;

  // enumerate each cell A(pi, Des(pi c pi^{-1})) directly and count coverage
  std::vector<int> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
    RankMask strict = 0;
    int prev = pi[(inv[0] + 1) % n];
    for (int i = 1; i < n; ++i) {
      const int cur = pi[(inv[i] + 1) % n];
      if (prev > cur) strict |= RankMask{1} << (i - 1);
      prev = cur;
    }
    auto rec = [&](auto&& self, int i, int lo, std::uint64_t code) -> void {
      if (i == n) {
        ++hits[code];
        return;
      }
      for (int val = lo; val <= maxcolor; ++val)
        self(self, i + 1, val + (strict >> i & 1u),
             code + static_cast<std::uint64_t>(val - 1) * digit[inv[i]]);
    };
    // position i=0 carries no constraint; strict bit i gates position i+1
    rec(rec, 0, 1, 0);
  } while (std::next_permutation(pi.begin(), pi.end()));

  // every nonconstant word in exactly one cell, and that cell is cstd's
  Word w(static_cast<size_t>(n));
  for (std::uint64_t code = 0; code < pow; ++code) {
    std::uint64_t c = code;
    bool constant = true;
    for (int v = 0; v < n; ++v) {
      w[v] = static_cast<int>(c % maxcolor) + 1;
      c /= maxcolor;
      constant &= w[v] == w[0];
    }
    if (constant) {
      if (hits[code] != 0) return false;
      continue;
    }
    if (hits[code] != 1) return false;
    const Permutation pistar = cstd(w);
    const Permutation inv2 = pistar.inverse();
    RankMask strict = 0;
    int prev = pistar[inv2[0] % n];
    for (int i = 1; i < n; ++i) {
      const int cur = pistar[inv2[i] % n];
      if (prev > cur) strict |= RankMask{1} << (i - 1);
      prev = cur;
    }
    if (!in_A(pistar, strict, w)) return false;
  }
  return true;
}

RankMask h_descents(const Hypertree& t, const Permutation& pi) {
  const int n = t.vertex_count();
  if (pi.size() != n) throw std::invalid_argument("labeling size mismatch");
  std::vector<int> inv(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
  RankMask m = 0;
  for (int i = 1; i < n; ++i) {
    const auto& pr = t.descent_probe(inv[i - 1], inv[i]);
    if (pi[pr.first] > pi[pr.second]) m |= RankMask{1} << (i - 1);
  }
  return m;
}

QSymF theorem_f_expansion(const Hypertree& t, int guard) {
  require_prime_edges(t);
  const int n = t.vertex_count();
  if (n > guard)
    throw GuardError("theorem expansion guard exceeded: n = " + std::to_string(n));
  QSymF out(n);
  auto& dense = out.dense();
  std::vector<int> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
    RankMask m = 0;
    for (int i = 1; i < n; ++i) {
      const auto& pr = t.descent_probe(inv[i - 1], inv[i]);
      if (pi[pr.first] > pi[pr.second]) m |= RankMask{1} << (i - 1);
    }
    ++dense[m];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

// omega restricted to an edge: x before y when pi(c(x)) < pi(c(y))
std::vector<TotalOrder> cycle_image_orders(const Hypertree& t,
                                           std::span<const int> pi) {
  std::vector<TotalOrder> orders;
  orders.reserve(t.edge_count());
  for (int pos = 0; pos < t.edge_count(); ++pos) {
    std::vector<int> seq = t.edge_at(pos);
    std::sort(seq.begin(), seq.end(), [&](int x, int y) {
      return pi[t.cycle_next(pos, x)] < pi[t.cycle_next(pos, y)];
    });
    orders.emplace_back(std::move(seq));
  }
  return orders;
}

RankMask descents_through_order(const TotalOrder& omega,
                                std::span<const int> pi,
                                std::span<const int> inv) {
  const int n = static_cast<int>(pi.size());
  RankMask m = 0;
  for (int i = 1; i < n; ++i)
    if (omega.rank(inv[i - 1]) > omega.rank(inv[i]))
      m |= RankMask{1} << (i - 1);
  return m;
}

}  // namespace

QSymF corollary_f_expansion(const Hypertree& t, int guard) {
  require_prime_edges(t);
  const int n = t.vertex_count();
  if (n > guard)
    throw GuardError("corollary expansion guard exceeded: n = " +
                     std::to_string(n));
  QSymF out(n);
  auto& dense = out.dense();
  std::vector<int> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<int> inv(static_cast<size_t>(n));
  do {
    for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
    const TotalOrder omega = fold_insertion(t, cycle_image_orders(t, pi));
    ++dense[descents_through_order(omega, pi, inv)];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

// tau with Des(tau) = s: ascending runs of consecutive integers, the later
// run always over the smaller values
std::vector<int> canonical_descent_word(RankMask s, int m) {
  const Composition alpha = comp_of_subset(s, m);
  std::vector<int> suffix(alpha.size() + 1, 0);
  for (size_t j = alpha.size(); j-- > 0;)
    suffix[j] = suffix[j + 1] + alpha[j];
  std::vector<int> tau;
  tau.reserve(static_cast<size_t>(m));
  for (size_t j = 0; j < alpha.size(); ++j)
    for (int v = 0; v < alpha[j]; ++v) tau.push_back(suffix[j + 1] + v + 1);
  return tau;
}

}  // namespace

QSymF generalized_f_expansion(
    const Hypertree& t, const std::map<int, PartitionAssignment>& assignments,
    int guard) {
  const int n = t.vertex_count();
  if (n > guard)
    throw GuardError("generalized expansion guard exceeded: n = " +
                     std::to_string(n));

  // one assignment per edge size; primes default to the cyclic-descent table
  std::map<int, PartitionAssignment> tables = assignments;
  for (int pos = 0; pos < t.edge_count(); ++pos) {
    const int m = static_cast<int>(t.edge_at(pos).size());
    if (tables.contains(m)) continue;
    if (!is_prime(m))
      throw std::invalid_argument("no coloring-partition assignment for edge size " +
                                  std::to_string(m));
    tables.emplace(m, cyclic_descent_assignment(m));
  }
  for (const auto& [m, a] : tables)
    if (a.degree() != m)
      throw std::invalid_argument("assignment degree does not match its key");

  std::map<std::pair<int, RankMask>, std::vector<int>> tau_cache;
  const auto tau_for = [&](int m, RankMask s) -> const std::vector<int>& {
    auto it = tau_cache.find({m, s});
    if (it == tau_cache.end())
      it = tau_cache.emplace(std::pair{m, s}, canonical_descent_word(s, m)).first;
    return it->second;
  };

  QSymF out(n);
  auto& dense = out.dense();
  std::vector<int> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<int> inv(static_cast<size_t>(n));
  std::vector<TotalOrder> orders;
  do {
    for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
    orders.clear();
    for (int pos = 0; pos < t.edge_count(); ++pos) {
      const auto& ev = t.edge_at(pos);
      const int m = static_cast<int>(ev.size());
      // standardize pi on the edge: ranks 1..m in label order
      std::vector<int> by_label = ev;
      std::sort(by_label.begin(), by_label.end(),
                [&](int x, int y) { return pi[x] < pi[y]; });
      std::vector<int> line(static_cast<size_t>(m));
      for (int r = 0; r < m; ++r) {
        const auto idx = std::lower_bound(ev.begin(), ev.end(), by_label[r]) -
                         ev.begin();
        line[static_cast<size_t>(idx)] = r + 1;
      }
      const Permutation pi_i(std::move(line));
      const RankMask s = tables.at(m).at(pi_i);
      const auto& tau = tau_for(m, s);
      // omega_i = tau o pi_i as a total order on the edge
      std::vector<int> seq = ev;
      std::sort(seq.begin(), seq.end(), [&](int x, int y) {
        const auto rx = std::lower_bound(ev.begin(), ev.end(), x) - ev.begin();
        const auto ry = std::lower_bound(ev.begin(), ev.end(), y) - ev.begin();
        return tau[static_cast<size_t>(pi_i[static_cast<int>(rx)] - 1)] <
               tau[static_cast<size_t>(pi_i[static_cast<int>(ry)] - 1)];
      });
      orders.emplace_back(std::move(seq));
    }
    const TotalOrder omega = fold_insertion(t, orders);
    ++dense[descents_through_order(omega, pi, inv)];
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

std::optional<RankMask> first_difference(const QSymF& a, const QSymF& b) {
  for (RankMask m = 0; m < a.dense().size(); ++m)
    if (a.coeff(m) != b.coeff(m)) return m;
  return std::nullopt;
}

}  // namespace

VerifyReport verify_routes(const Hypergraph& h,
                           const std::map<int, PartitionAssignment>& assignments,
                           int guard) {
  VerifyReport rep;
  rep.degree = h.vertex_count();
  rep.classification = h.classify();
  rep.reference = m_to_f(oracle_m_expansion(h, guard));
  rep.routes.push_back({"oracle-m", true, ""});
  rep.f_positivity = positivity(rep.reference);
  rep.coefficient_sum = rep.reference.coefficient_sum();

  const auto compare = [&](const QSymF& other, const std::string& name) {
    if (const auto diff = first_difference(rep.reference, other)) {
      if (rep.agree) {
        rep.agree = false;
        rep.mismatch_subset = ranks_of(*diff, rep.degree);
        rep.mismatch_pair = "oracle-m vs " + name;
      }
    }
  };

  {
    const SymExpansion p = oracle_p_expansion(h);
    compare(m_to_f(msym_to_qsym(psym_to_msym(p))), "oracle-p");
    rep.routes.push_back({"oracle-p", true, ""});
  }

  if (!rep.classification.hypertree) {
    rep.routes.push_back({"theorem", false, "not a hypertree"});
    rep.routes.push_back({"corollary", false, "not a hypertree"});
    rep.routes.push_back({"generalized", false, "not a hypertree"});
    return rep;
  }
  const Hypertree t = Hypertree::with_defaults(h);

  bool all_prime = true;
  for (int pos = 0; pos < t.edge_count(); ++pos)
    all_prime &= is_prime(static_cast<int>(t.edge_at(pos).size()));
  if (all_prime) {
    compare(theorem_f_expansion(t, guard), "theorem");
    rep.routes.push_back({"theorem", true, ""});
    compare(corollary_f_expansion(t, guard), "corollary");
    rep.routes.push_back({"corollary", true, ""});
  } else {
    rep.routes.push_back({"theorem", false, "edge sizes not all prime"});
    rep.routes.push_back({"corollary", false, "edge sizes not all prime"});
  }

  bool generalizable = true;
  for (int pos = 0; pos < t.edge_count(); ++pos) {
    const int m = static_cast<int>(t.edge_at(pos).size());
    if (!is_prime(m) && !assignments.contains(m)) generalizable = false;
  }
  if (generalizable) {
    compare(generalized_f_expansion(t, assignments, guard), "generalized");
    rep.routes.push_back({"generalized", true, ""});
  } else {
    rep.routes.push_back(
        {"generalized", false, "missing assignment for a non-prime edge size"});
  }
  return rep;
}

}  // namespace hypercsf
