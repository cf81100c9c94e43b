#pragma once

// Root lattice of type A~_{n-1}: integer coordinates over the simple roots
// alpha_1, ..., alpha_n. delta = alpha_1 + ... + alpha_n is the null root.
//
// Orientation: a word s_{i_1} ... s_{i_r} acts on a root by applying s_{i_r}
// first, so act(word, r) is function application of the element it
// evaluates to. The inversion set of w is {alpha > 0 : w(alpha) < 0}.

#include <compare>
#include <span>
#include <vector>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

class Root {
 public:
  explicit Root(std::vector<Int> coeffs);
  static Root simple(int n, int i);
  static Root delta(int n);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  std::span<const Int> coeffs() const { return coeffs_; }
  Int operator[](int i) const { return coeffs_[i - 1]; }  // 1-based

  bool is_positive() const;
  bool is_negative() const;

  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  Root operator-() const;
  Root scaled(Int factor) const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::vector<Int> coeffs_;
};

// Symmetric form with (alpha_i, alpha_i) = 2, (alpha_i, alpha_j) = -1 for
// adjacent i, j and 0 otherwise.
Int pairing(const Root& lhs, const Root& rhs);

// s_i(r) = r - (r, alpha_i) alpha_i.
Root simple_reflection_action(int i, const Root& r);

Root act(const CoxeterWord& word, const Root& r);

// rho(alpha_i) = alpha_{i+1}, indices mod n.
Root rho_action(const Root& r, Int power = 1);

// Sorted. Built from the canonical reduced word i_1 ... i_r as
// {alpha_{i_r}, s_{i_r} alpha_{i_{r-1}}, ..., s_{i_r} ... s_{i_2} alpha_{i_1}}.
std::vector<Root> inversion_set(const AffinePermutation& w);
std::vector<Root> inversion_set(const CoxeterWord& reduced_word);

// No alpha, beta in the inversion set whose sum is a root. For positive real
// roots this happens exactly when their pairing is -1.
bool condition_iv_holds(const AffinePermutation& w);
bool no_summable_pair(std::span<const Root> roots);

}  // namespace affine321
