#pragma once

// Shi's partition statistic sigma(w) and the two-sided cell order it induces
// on W(A~_{n-1}).
//
// d_k(w) is the largest |X| where X is a disjoint union of k chains X_i (u < v
// in X_i implies w(u) > w(v)) and no two elements of X are congruent mod n.
// sigma(w) = (d_1, d_2 - d_1, ..., d_t - d_{t-1}) with d_t = n.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

class Partition {
 public:
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  int size() const { return total_; }  // the integer partitioned
  const std::vector<int>& parts() const { return parts_; }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  int part_count() const { return static_cast<int>(parts_.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> all_partitions(int n);

// Set bit s (0-based residue s + 1) of chain_successors(w)[r] iff some
// element of residue class s + 1 can follow one of class r + 1 in a chain:
// there is an integer m with r < s + mn and w(s) + mn < w(r).
std::vector<std::uint32_t> chain_successors(const AffinePermutation& w);

// (d_1, ..., d_n). Every chain may be translated by a multiple of n on its
// own without disturbing residues, so d_k depends only on which residue
// sets are realizable as single chains; those are the vertex sets of simple
// paths in the successor digraph above.
std::vector<int> chain_cover_sizes(const AffinePermutation& w);

// Same statistic restricted to chains inside positions [lo, hi], computed by
// walking actual positions (no translation argument).
std::vector<int> chain_cover_sizes_in_window(const AffinePermutation& w, Int lo, Int hi);

// Upper end of the window [1, hi] that contains an optimal family of chains:
// n + n * (M + 2n) with M the spread of the window entries, times `scale`.
Int chain_window_bound(const AffinePermutation& w, int scale = 1);

int d_k(const AffinePermutation& w, int k);

Partition sigma(const AffinePermutation& w);
// Partition from (d_1, ..., d_n). Throws std::logic_error if the differences
// are not weakly decreasing.
Partition partition_from_chain_sizes(const std::vector<int>& d);

bool dominates(const Partition& lam, const Partition& mu);

// y <=_LR w in the two-sided cell preorder iff sigma(y) dominates sigma(w).
bool leq_lr(const AffinePermutation& y, const AffinePermutation& w);
bool same_two_sided_cell(const AffinePermutation& y, const AffinePermutation& w);

// Fully commutative iff no chain has three elements, i.e. sigma(w)_1 <= 2.
bool is_fc_by_sigma(const AffinePermutation& w);

// s_2 s_4 ... s_{2k} for 0 <= k <= n/2 together with sigma = (2^k, 1^{n-2k}).
std::vector<std::pair<AffinePermutation, Partition>> fc_cell_representatives(int n);
int fc_cell_count(int n);

}  // namespace affine321
