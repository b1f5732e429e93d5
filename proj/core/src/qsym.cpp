#include "hypercsf/qsym.hpp"

#include <algorithm>
#include <bit>

namespace hypercsf {

namespace {

int checked_degree(int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("expansion degree out of range (1..16)");
  return n;
}

Partition sorted_parts(Composition c) {
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

void check_partition_of(const Partition& p, int n) {
  int sum = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) throw std::invalid_argument("partition part < 1");
    if (i > 0 && p[i] > p[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    sum += p[i];
  }
  if (sum != n) throw std::invalid_argument("partition does not sum to the degree");
}

}  // namespace

QSymF::QSymF(int degree) : n_(checked_degree(degree)) {
  c_.assign(size_t{1} << (n_ - 1), Int{0});
}

std::vector<std::pair<RankMask, Int>> QSymF::terms() const {
  std::vector<std::pair<RankMask, Int>> out;
  for (RankMask m = 0; m < c_.size(); ++m)
    if (c_[m] != 0) out.emplace_back(m, c_[m]);
  return out;
}

Int QSymF::coefficient_sum() const {
  Int s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

QSymM::QSymM(int degree) : n_(checked_degree(degree)) {
  c_.assign(size_t{1} << (n_ - 1), Int{0});
}

std::vector<std::pair<Composition, Int>> QSymM::terms() const {
  std::vector<std::pair<Composition, Int>> out;
  for (RankMask m = 0; m < c_.size(); ++m)
    if (c_[m] != 0) out.emplace_back(comp_of_subset(m, n_), c_[m]);
  return out;
}

Int QSymM::coefficient_sum() const {
  Int s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

void SymExpansion::add(const Partition& key, const Int& v) {
  check_partition_of(key, degree);
  coeff[key] += v;
}

void SymExpansion::prune() {
  for (auto it = coeff.begin(); it != coeff.end();)
    it = it->second == 0 ? coeff.erase(it) : std::next(it);
}

QSymF m_to_f(const QSymM& x) {
  QSymF out(x.degree());
  out.dense() = x.dense();
  auto& a = out.dense();
  const int bits = x.degree() - 1;
  // Moebius over the subset lattice: a_S = sum_{T <= S} (-1)^{|S\T|} c_T
  for (int b = 0; b < bits; ++b)
    for (RankMask m = 0; m < a.size(); ++m)
      if (m >> b & 1u) a[m] -= a[m ^ (RankMask{1} << b)];
  return out;
}

QSymM f_to_m(const QSymF& x) {
  QSymM out(x.degree());
  out.dense() = x.dense();
  auto& c = out.dense();
  const int bits = x.degree() - 1;
  for (int b = 0; b < bits; ++b)
    for (RankMask m = 0; m < c.size(); ++m)
      if (m >> b & 1u) c[m] += c[m ^ (RankMask{1} << b)];
  return out;
}

bool is_symmetric(const QSymM& x) {
  std::map<Partition, Int> rep;
  for (RankMask m = 0; m < x.dense().size(); ++m) {
    const Partition key = sorted_parts(comp_of_subset(m, x.degree()));
    auto [it, fresh] = rep.emplace(key, x.coeff_mask(m));
    if (!fresh && it->second != x.coeff_mask(m)) return false;
  }
  return true;
}

SymExpansion qsym_to_msym(const QSymM& x) {
  if (!is_symmetric(x))
    throw std::invalid_argument("qsym_to_msym: expansion is not symmetric");
  SymExpansion out{x.degree(), SymBasis::monomial, {}};
  for (RankMask m = 0; m < x.dense().size(); ++m) {
    if (x.coeff_mask(m) == 0) continue;
    out.coeff.emplace(sorted_parts(comp_of_subset(m, x.degree())),
                      x.coeff_mask(m));
  }
  return out;
}

QSymM msym_to_qsym(const SymExpansion& x) {
  if (x.basis != SymBasis::monomial)
    throw std::invalid_argument("msym_to_qsym expects the monomial basis");
  QSymM out(x.degree);
  for (const auto& [lam, v] : x.coeff) {
    Composition c = lam;
    std::sort(c.begin(), c.end());
    do {
      out.set_mask(subset_of_comp(c), v);
    } while (std::next_permutation(c.begin(), c.end()));
  }
  return out;
}

namespace {

int multiplicity(const Partition& p, int v) {
  int m = 0;
  for (int x : p) m += x == v;
  return m;
}

// m-expansion of (current * p_r): candidates are "append a part r" and
// "grow one distinct part v to v+r"; the multiplier is the number of
// positions of the result that shrink back to the source.
std::map<Partition, Int> multiply_by_power_sum(
    const std::map<Partition, Int>& cur, int r) {
  std::map<Partition, Int> next;
  for (const auto& [mu, a] : cur) {
    {
      Partition nu = mu;
      nu.push_back(r);
      std::sort(nu.begin(), nu.end(), std::greater<>());
      next[nu] += a * multiplicity(nu, r);
    }
    int prev = -1;
    for (size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == prev) continue;
      prev = mu[i];
      Partition nu = mu;
      nu[i] += r;
      std::sort(nu.begin(), nu.end(), std::greater<>());
      next[nu] += a * multiplicity(nu, mu[i] + r);
    }
  }
  return next;
}

std::map<Partition, Int> power_product_to_m(const Partition& lam) {
  std::map<Partition, Int> cur{{{}, Int{1}}};
  for (int r : lam) cur = multiply_by_power_sum(cur, r);
  return cur;
}

}  // namespace

SymExpansion psym_to_msym(const SymExpansion& x) {
  if (x.basis != SymBasis::power)
    throw std::invalid_argument("psym_to_msym expects the power-sum basis");
  SymExpansion out{x.degree, SymBasis::monomial, {}};
  for (const auto& [lam, v] : x.coeff) {
    if (v == 0) continue;
    for (const auto& [mu, k] : power_product_to_m(lam)) out.coeff[mu] += v * k;
  }
  out.prune();
  return out;
}

SymExpansion msym_to_psym(const SymExpansion& x) {
  if (x.basis != SymBasis::monomial)
    throw std::invalid_argument("msym_to_psym expects the monomial basis");
  SymExpansion out{x.degree, SymBasis::power, {}};
  std::map<Partition, Int> residual = x.coeff;
  auto parts = partitions_of(x.degree);
  // ascending dominance: finest partitions first
  std::reverse(parts.begin(), parts.end());
  for (const auto& lam : parts) {
    const auto it = residual.find(lam);
    if (it == residual.end() || it->second == 0) continue;
    const auto row = power_product_to_m(lam);
    const Int& diag = row.at(lam);
    if (it->second % diag != 0)
      throw std::invalid_argument(
          "msym_to_psym: expansion has no integer power-sum coefficients");
    const Int d = it->second / diag;
    for (const auto& [mu, k] : row) residual[mu] -= d * k;
    out.coeff[lam] = d;
  }
  for (const auto& [mu, v] : residual)
    if (v != 0)
      throw std::invalid_argument("msym_to_psym: back-substitution residue");
  out.prune();
  return out;
}

namespace {

// Counts chains of shapes growing by horizontal strips of sizes mu to lam;
// each new row length is capped by the pre-strip length of the row above,
// which keeps every column from receiving two equal entries.
std::uint64_t count_strip_completions(const Partition& lim, std::vector<int>& cur,
                                      const Partition& mu, size_t mi);

std::uint64_t place_strip(const Partition& lim, const std::vector<int>& base,
                          std::vector<int>& cur, const Partition& mu, size_t mi,
                          size_t row, int left) {
  if (row == lim.size())
    return left == 0 ? count_strip_completions(lim, cur, mu, mi + 1) : 0;
  const int cap = row == 0 ? lim[0] : std::min(lim[row], base[row - 1]);
  const int hi = std::min(cap - cur[row], left);
  std::uint64_t total = 0;
  for (int a = 0; a <= hi; ++a) {
    cur[row] += a;
    total += place_strip(lim, base, cur, mu, mi, row + 1, left - a);
    cur[row] -= a;
  }
  return total;
}

std::uint64_t count_strip_completions(const Partition& lim, std::vector<int>& cur,
                                      const Partition& mu, size_t mi) {
  if (mi == mu.size()) {
    for (size_t r = 0; r < lim.size(); ++r)
      if (cur[r] != lim[r]) return 0;
    return 1;
  }
  const std::vector<int> base = cur;
  return place_strip(lim, base, cur, mu, mi, 0, mu[mi]);
}

}  // namespace

Int kostka(const Partition& lam, const Partition& mu) {
  int nl = 0, nm = 0;
  for (int x : lam) nl += x;
  for (int x : mu) nm += x;
  if (nl != nm) throw std::invalid_argument("kostka: |lam| != |mu|");
  if (nl > 12) throw GuardError("kostka guard exceeded (degree > 12)");
  check_partition_of(lam, nl);
  check_partition_of(mu, nm);
  std::vector<int> cur(lam.size(), 0);
  return Int{count_strip_completions(lam, cur, mu, 0)};
}

SymExpansion msym_to_ssym(const SymExpansion& x) {
  if (x.basis != SymBasis::monomial)
    throw std::invalid_argument("msym_to_ssym expects the monomial basis");
  SymExpansion out{x.degree, SymBasis::schur, {}};
  std::map<Partition, Int> residual = x.coeff;
  for (const auto& lam : partitions_of(x.degree)) {  // descending: (n) first
    const auto it = residual.find(lam);
    if (it == residual.end() || it->second == 0) continue;
    const Int d = it->second;  // K_{lam,lam} = 1
    for (const auto& mu : partitions_of(x.degree)) {
      if (!dominates(lam, mu)) continue;
      const Int k = kostka(lam, mu);
      if (k != 0) residual[mu] -= d * k;
    }
    out.coeff[lam] = d;
  }
  for (const auto& [mu, v] : residual)
    if (v != 0)
      throw std::invalid_argument("msym_to_ssym: back-substitution residue");
  out.prune();
  return out;
}

SymExpansion ssym_to_msym(const SymExpansion& x) {
  if (x.basis != SymBasis::schur)
    throw std::invalid_argument("ssym_to_msym expects the Schur basis");
  SymExpansion out{x.degree, SymBasis::monomial, {}};
  for (const auto& [lam, d] : x.coeff) {
    if (d == 0) continue;
    for (const auto& mu : partitions_of(x.degree)) {
      if (!dominates(lam, mu)) continue;
      const Int k = kostka(lam, mu);
      if (k != 0) out.coeff[mu] += d * k;
    }
  }
  out.prune();
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative degree");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool dominates(const Partition& lam, const Partition& mu) {
  int sl = 0, sm = 0;
  for (size_t i = 0; i < std::max(lam.size(), mu.size()); ++i) {
    sl += i < lam.size() ? lam[i] : 0;
    sm += i < mu.size() ? mu[i] : 0;
    if (sl < sm) return false;
  }
  return sl == sm;
}

Positivity positivity(const QSymF& x) {
  for (RankMask m = 0; m < x.dense().size(); ++m)
    if (x.coeff(m) < 0)
      return {false, ranks_of(m, x.degree()), x.coeff(m)};
  return {};
}

Positivity positivity(const QSymM& x) {
  for (RankMask m = 0; m < x.dense().size(); ++m)
    if (x.coeff_mask(m) < 0)
      return {false, comp_of_subset(m, x.degree()), x.coeff_mask(m)};
  return {};
}

Positivity positivity(const SymExpansion& x) {
  for (const auto& [key, v] : x.coeff)
    if (v < 0) return {false, key, v};
  return {};
}

}  // namespace hypercsf
