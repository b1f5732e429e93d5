#include "hypercsf/assignment.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hypercsf {

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// nibble-packed block position of every vertex; a collision-free face key
// for n <= 8
std::uint64_t face_key(std::span<const VertexMask> blocks) {
  std::uint64_t key = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    VertexMask m = blocks[b];
    while (m) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      key |= static_cast<std::uint64_t>(b + 1) << (4 * v);
    }
  }
  return key;
}

// blocks of the face whose compatible facet pi splits at the boundary mask
std::uint64_t face_key_from(const std::vector<int>& by_rank, int n, RankMask m) {
  std::uint64_t key = 0;
  std::uint64_t block = 1;
  for (int i = 0; i < n; ++i) {
    key |= block << (4 * by_rank[i]);
    if (m >> i & 1u) ++block;
  }
  return key;
}

}  // namespace

Face::Face(std::vector<VertexMask> bs) : blocks(std::move(bs)) {
  if (blocks.size() < 2)
    throw std::invalid_argument("face needs >= 2 blocks");
  VertexMask seen = 0;
  for (VertexMask b : blocks) {
    if (b == 0) throw std::invalid_argument("empty face block");
    if (b & seen) throw std::invalid_argument("overlapping face blocks");
    seen |= b;
  }
  boundary = boundary_set(blocks);
}

PartitionAssignment::PartitionAssignment(int n, std::vector<RankMask> table)
    : n_(n), table_(std::move(table)) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("assignment degree out of range (2..8)");
  if (table_.size() != factorial_u64(n))
    throw std::invalid_argument("assignment table must have n! rows");
  const RankMask full = (RankMask{1} << (n - 1)) - 1;
  for (RankMask s : table_)
    if ((s & ~full) != 0)
      throw std::invalid_argument("assignment subset outside [n-1]");
}

std::vector<Permutation> compatible_facets(const Face& f) {
  std::vector<std::vector<int>> choices;  // per block, vertices ascending
  int n = 0;
  for (VertexMask b : f.blocks) {
    std::vector<int> vs;
    VertexMask m = b;
    while (m) {
      vs.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    n += static_cast<int>(vs.size());
    choices.push_back(std::move(vs));
  }
  std::vector<Permutation> out;
  std::vector<int> line(static_cast<size_t>(n));
  auto rec = [&](auto&& self, size_t bi, int next_rank) -> void {
    if (bi == choices.size()) {
      out.emplace_back(line);
      return;
    }
    auto& block = choices[bi];
    // block orderings in lexicographic order
    do {
      int r = next_rank;
      for (int v : block) line[v] = r++;
      self(self, bi + 1, next_rank + static_cast<int>(block.size()));
    } while (std::next_permutation(block.begin(), block.end()));
    std::sort(block.begin(), block.end());
  };
  rec(rec, 0, 1);
  return out;
}

PartitionAssignment cyclic_descent_assignment(int n) {
  if (!is_prime(n))
    throw std::invalid_argument(
        "cyclic descent assignment is only valid for prime degree");
  std::vector<RankMask> table(factorial_u64(n));
  std::vector<int> sigma(static_cast<size_t>(n));
  std::uint64_t rank = 0;
  for_each_permutation(n, [&](const Permutation& pi) {
    const Permutation inv = pi.inverse();
    // sigma = pi c pi^{-1} for the ascending cycle c: v -> v+1 mod n
    for (int i = 0; i < n; ++i) {
      const int v = inv[i] - 1;
      sigma[i] = pi[(v + 1) % n];
    }
    RankMask m = 0;
    for (int i = 1; i < n; ++i)
      if (sigma[i - 1] > sigma[i]) m |= RankMask{1} << (i - 1);
    table[rank++] = m;
  });
  return PartitionAssignment(n, std::move(table));
}

bool verify_assignment(const PartitionAssignment& a) {
  const int n = a.degree();
  const RankMask full = (RankMask{1} << (n - 1)) - 1;
  for (RankMask s : a.table())
    if (s == 0) return false;  // would capture constant colorings

  // enumerate faces once
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for_each_ordered_set_partition(n, [&](std::span<const VertexMask> blocks) {
    if (blocks.size() < 2) return;
    const std::uint32_t next = static_cast<std::uint32_t>(index.size());
    index.emplace(face_key(blocks), next);
  });
  std::vector<std::uint32_t> cover(index.size(), 0);

  std::vector<int> by_rank(static_cast<size_t>(n));
  std::uint64_t rank = 0;
  bool ok = true;
  for_each_permutation(n, [&](const Permutation& pi) {
    const RankMask s = a.at_rank(rank++);
    for (int v = 0; v < n; ++v) by_rank[pi[v] - 1] = v;
    const RankMask free = full & ~s;
    RankMask t = 0;
    for (;;) {  // all supersets of s
      const RankMask m = s | t;
      if (m != 0) {
        const auto it = index.find(face_key_from(by_rank, n, m));
        if (it == index.end()) {
          ok = false;
          return;
        }
        ++cover[it->second];
      }
      if (t == free) break;
      t = (t - free) & free;
    }
  });
  if (!ok) return false;
  for (std::uint32_t c : cover)
    if (c != 1) return false;
  return true;
}

SearchResult search_assignment(int n, std::uint64_t node_budget) {
  if (n < 2 || n > 6)
    throw GuardError("search_assignment guard exceeded (n <= 6)");
  const RankMask full = (RankMask{1} << (n - 1)) - 1;
  const std::uint64_t nfact = factorial_u64(n);

  // face universe
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for_each_ordered_set_partition(n, [&](std::span<const VertexMask> blocks) {
    if (blocks.size() < 2) return;
    const std::uint32_t next = static_cast<std::uint32_t>(index.size());
    index.emplace(face_key(blocks), next);
  });
  const size_t nfaces = index.size();
  const size_t words = (nfaces + 63) / 64;

  // candidate subsets ordered by popcount then value
  std::vector<RankMask> subsets;
  for (RankMask s = 1; s <= full; ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](RankMask a, RankMask b) {
                     const int pa = std::popcount(a), pb = std::popcount(b);
                     return pa != pb ? pa < pb : a < b;
                   });

  // cover bitset of every (pi, S) candidate
  std::vector<std::vector<std::uint64_t>> covers(
      nfact * subsets.size(), std::vector<std::uint64_t>());
  {
    std::vector<int> by_rank(static_cast<size_t>(n));
    std::uint64_t rank = 0;
    for_each_permutation(n, [&](const Permutation& pi) {
      for (int v = 0; v < n; ++v) by_rank[pi[v] - 1] = v;
      for (size_t si = 0; si < subsets.size(); ++si) {
        const RankMask s = subsets[si];
        auto& bits = covers[rank * subsets.size() + si];
        bits.assign(words, 0);
        const RankMask free = full & ~s;
        RankMask t = 0;
        for (;;) {
          const std::uint32_t fi = index.at(face_key_from(by_rank, n, s | t));
          bits[fi / 64] |= std::uint64_t{1} << (fi % 64);
          if (t == free) break;
          t = (t - free) & free;
        }
      }
      ++rank;
    });
  }

  std::vector<std::uint64_t> covered(words, 0);
  std::vector<RankMask> chosen(nfact, 0);
  std::vector<char> assigned(nfact, 0);
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  auto disjoint = [&](const std::vector<std::uint64_t>& bits) {
    for (size_t w = 0; w < words; ++w)
      if (bits[w] & covered[w]) return false;
    return true;
  };
  auto viable_count = [&](std::uint64_t r) {
    int c = 0;
    for (size_t si = 0; si < subsets.size(); ++si)
      if (disjoint(covers[r * subsets.size() + si])) ++c;
    return c;
  };

  auto rec = [&](auto&& self, std::uint64_t remaining) -> bool {
    if (remaining == 0) {
      for (size_t w = 0; w < words; ++w) {
        std::uint64_t want = ~std::uint64_t{0};
        if (w + 1 == words && nfaces % 64)
          want = (std::uint64_t{1} << (nfaces % 64)) - 1;
        if (covered[w] != want) return false;
      }
      return true;
    }
    // fail-first facet selection, lexicographic tie-break
    std::uint64_t pick = nfact;
    int best = -1;
    for (std::uint64_t r = 0; r < nfact; ++r) {
      if (assigned[r]) continue;
      const int c = viable_count(r);
      if (best < 0 || c < best) {
        best = c;
        pick = r;
        if (c == 0) break;
      }
    }
    if (best == 0) return false;
    assigned[pick] = 1;
    for (size_t si = 0; si < subsets.size(); ++si) {
      const auto& bits = covers[pick * subsets.size() + si];
      if (!disjoint(bits)) continue;
      if (++nodes > node_budget) {
        out_of_budget = true;
        break;
      }
      for (size_t w = 0; w < words; ++w) covered[w] |= bits[w];
      chosen[pick] = subsets[si];
      if (self(self, remaining - 1)) return true;
      for (size_t w = 0; w < words; ++w) covered[w] &= ~bits[w];
    }
    assigned[pick] = 0;
    return false;
  };

  SearchResult res;
  const bool found = rec(rec, nfact);
  res.nodes = nodes;
  if (found) {
    PartitionAssignment a(n, std::move(chosen));
    if (!verify_assignment(a))
      throw std::logic_error("search produced an unverifiable assignment");
    res.status = SearchResult::Status::found;
    res.assignment = std::move(a);
  } else {
    res.status = out_of_budget ? SearchResult::Status::budget_exceeded
                               : SearchResult::Status::none_exists;
  }
  return res;
}

}  // namespace hypercsf
