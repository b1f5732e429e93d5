#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypercsf/combinatorics.hpp"
#include "hypercsf/exact.hpp"

namespace hypercsf {

// Degree-n quasisymmetric function in the fundamental basis, stored densely:
// slot m holds the coefficient of F_S for the subset S <-> bitmask m.
class QSymF {
 public:
  explicit QSymF(int degree);

  int degree() const { return n_; }
  const Int& coeff(RankMask s) const { return c_[s]; }
  void set(RankMask s, Int v) { c_[s] = std::move(v); }
  void add(RankMask s, const Int& v) { c_[s] += v; }
  void add_unit(RankMask s) { ++c_[s]; }

  const std::vector<Int>& dense() const { return c_; }
  std::vector<Int>& dense() { return c_; }

  // Nonzero terms in ascending subset-mask order.
  std::vector<std::pair<RankMask, Int>> terms() const;
  Int coefficient_sum() const;

  bool operator==(const QSymF&) const = default;

 private:
  int n_;
  std::vector<Int> c_;
};

// Monomial-basis companion; slot m holds the coefficient of M_alpha where
// alpha = comp_of_subset(m, n).
class QSymM {
 public:
  explicit QSymM(int degree);

  int degree() const { return n_; }
  const Int& coeff_mask(RankMask m) const { return c_[m]; }
  const Int& coeff(const Composition& a) const { return c_[subset_of_comp(a)]; }
  void set_mask(RankMask m, Int v) { c_[m] = std::move(v); }
  void add_mask(RankMask m, const Int& v) { c_[m] += v; }
  void add_unit_mask(RankMask m) { ++c_[m]; }

  const std::vector<Int>& dense() const { return c_; }
  std::vector<Int>& dense() { return c_; }

  std::vector<std::pair<Composition, Int>> terms() const;
  Int coefficient_sum() const;

  bool operator==(const QSymM&) const = default;

 private:
  int n_;
  std::vector<Int> c_;
};

enum class SymBasis : char { monomial = 'm', power = 'p', schur = 's' };

// Symmetric function of degree n in the m, p or s basis; exact integer
// coefficients keyed by partitions of n.
struct SymExpansion {
  int degree = 0;
  SymBasis basis = SymBasis::monomial;
  std::map<Partition, Int> coeff;

  void add(const Partition& key, const Int& v);
  void prune();  // drop zero coefficients
  bool operator==(const SymExpansion&) const = default;
};

QSymF m_to_f(const QSymM& x);
QSymM f_to_m(const QSymF& x);

bool is_symmetric(const QSymM& x);
SymExpansion qsym_to_msym(const QSymM& x);   // fails when not symmetric
QSymM msym_to_qsym(const SymExpansion& x);

SymExpansion psym_to_msym(const SymExpansion& x);
// Exact back-substitution; fails when the p-expansion is not integral.
SymExpansion msym_to_psym(const SymExpansion& x);

// Semistandard tableaux of shape lam and content mu, by backtracking fill.
Int kostka(const Partition& lam, const Partition& mu);

SymExpansion msym_to_ssym(const SymExpansion& x);
SymExpansion ssym_to_msym(const SymExpansion& x);

// Partitions of n in descending lexicographic order, (n) first; this order
// refines dominance.
std::vector<Partition> partitions_of(int n);

bool dominates(const Partition& lam, const Partition& mu);

struct Positivity {
  bool positive = true;
  std::vector<int> witness_index;  // ranks / composition / partition
  Int witness_coeff = 0;
};

Positivity positivity(const QSymF& x);
Positivity positivity(const QSymM& x);
Positivity positivity(const SymExpansion& x);

}  // namespace hypercsf
