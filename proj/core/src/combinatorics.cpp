#include "hypercsf/combinatorics.hpp"

#include "hypercsf/exact.hpp"

namespace hypercsf {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a bijection onto {1..n}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  return Permutation(std::move(line));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int v = 0; v < size(); ++v) inv[img_[v] - 1] = v + 1;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::compose(const Permutation& g) const {
  if (size() != g.size())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(img_.size());
  for (int v = 0; v < size(); ++v) out[v] = img_[g.img_[v] - 1];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

RankMask Permutation::descent_set() const {
  RankMask m = 0;
  for (int i = 1; i < size(); ++i)
    if (img_[i - 1] > img_[i]) m |= RankMask{1} << (i - 1);
  return m;
}

std::uint64_t Permutation::lex_rank() const {
  const int n = size();
  std::uint64_t rank = 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    fact /= static_cast<std::uint64_t>(n - i);
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    rank += static_cast<std::uint64_t>(smaller) * fact;
  }
  return rank;
}

Composition comp_of_subset(RankMask s, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (n > 1 && (s >> (n - 1)) != 0)
    throw std::invalid_argument("rank subset has members outside [n-1]");
  Composition c;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (s >> (i - 1) & 1u) {
      c.push_back(i - prev);
      prev = i;
    }
  c.push_back(n - prev);
  return c;
}

RankMask subset_of_comp(const Composition& c) {
  if (c.empty()) throw std::invalid_argument("empty composition");
  RankMask m = 0;
  int total = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw std::invalid_argument("composition part < 1");
    total += c[i];
    if (i + 1 < c.size()) m |= RankMask{1} << (total - 1);
  }
  return m;
}

std::vector<int> ranks_of(RankMask s, int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (s >> (i - 1) & 1u) out.push_back(i);
  return out;
}

RankMask mask_of_ranks(std::span<const int> ranks, int n) {
  RankMask m = 0;
  for (int r : ranks) {
    if (r < 1 || r >= n)
      throw std::invalid_argument("rank outside [n-1]: " + std::to_string(r));
    m |= RankMask{1} << (r - 1);
  }
  return m;
}

RankMask boundary_set(std::span<const VertexMask> blocks) {
  RankMask m = 0;
  int cum = 0;
  for (size_t i = 0; i + 1 < blocks.size(); ++i) {
    cum += std::popcount(blocks[i]);
    m |= RankMask{1} << (cum - 1);
  }
  return m;
}

RankMask boundary_set_sizes(std::span<const int> block_sizes) {
  RankMask m = 0;
  int cum = 0;
  for (size_t i = 0; i + 1 < block_sizes.size(); ++i) {
    cum += block_sizes[i];
    m |= RankMask{1} << (cum - 1);
  }
  return m;
}

bool satisfies_ascent_chain(const Permutation& pi, RankMask strict,
                            std::span<const int> values) {
  const int n = pi.size();
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("value vector size mismatch");
  std::vector<int> inv(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) inv[pi[v] - 1] = v;
  for (int i = 1; i < n; ++i) {
    const int a = values[inv[i - 1]];
    const int b = values[inv[i]];
    if (a > b) return false;
    if (a == b && (strict >> (i - 1) & 1u)) return false;
  }
  return true;
}

}  // namespace hypercsf
