#pragma once

// Affine symmetric group of type A~_{n-1} realized as permutations w of the
// integers with w(t + n) = w(t) + n and sum_{t=1..n} w(t) = n(n+1)/2.
// Elements are stored in window notation (w(1), ..., w(n)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace affine321 {

using Int = std::int64_t;

inline constexpr std::size_t kDefaultBallBudget = 5'000'000;

// Representative of t mod n in {1, ..., n}.
constexpr Int residue(Int t, int n) {
  Int r = (t - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

// Generators s_i and s_j do not commute iff i - j = +-1 mod n.
constexpr bool adjacent(int i, int j, int n) {
  int d = ((i - j) % n + n) % n;
  return d == 1 || d == n - 1;
}

void require_rank(int n);

// Operations on raw windows of equivariant bijections (w(t+n) = w(t)+n).
// These do not assume the sum condition, so they serve the extended group
// as well.
namespace window_ops {

Int apply(std::span<const Int> window, Int t);

// Throws InvalidArgument("residue collision ...") if two entries agree mod n.
void require_distinct_residues(std::span<const Int> window);

std::vector<Int> compose(std::span<const Int> outer, std::span<const Int> inner);
std::vector<Int> invert(std::span<const Int> window);

}  // namespace window_ops

class AffinePermutation {
 public:
  // Validates both window invariants; the error message names the violated one.
  static AffinePermutation from_window(std::vector<Int> window);
  static AffinePermutation identity(int n);
  // s_i for 1 <= i <= n; s_n swaps the residue classes of n and 1.
  static AffinePermutation generator(int n, int i);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const Int> window() const { return window_; }

  // w(t) for any integer t.
  Int operator()(Int t) const { return window_ops::apply(window_, t); }

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  explicit AffinePermutation(std::vector<Int> window) : window_(std::move(window)) {}
  std::vector<Int> window_;
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept;
};

class CoxeterWord {
 public:
  CoxeterWord(int n, std::vector<int> letters);
  explicit CoxeterWord(int n) : n_(n) {}

  int rank() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const CoxeterWord&, const CoxeterWord&) = default;
  friend auto operator<=>(const CoxeterWord&, const CoxeterWord&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

Int apply(const AffinePermutation& w, Int t);

// Left action convention: compose(u, v)(t) = u(v(t)).
AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& w);

// w(i) > w(i+1), i.e. l(w s_i) < l(w).
bool is_right_descent(const AffinePermutation& w, int i);
// w^{-1}(i) > w^{-1}(i+1), i.e. l(s_i w) < l(w).
bool is_left_descent(const AffinePermutation& w, int i);

// Length by greedy stripping of the smallest right descent.
int length(const AffinePermutation& w);

// Number of pairs (i, j) with 1 <= i <= n, j > i, w(i) > w(j). Equals length.
Int inversion_count(const AffinePermutation& w);

// Reduced word obtained by stripping the smallest right descent repeatedly
// and reversing the stripped letters.
CoxeterWord canonical_reduced_word(const AffinePermutation& w);

// Exact ball {w : l(w) <= radius}, built frontier by frontier so that the
// depth of an element is its length. Each level is sorted by window.
struct Ball {
  int rank = 0;
  std::vector<std::vector<AffinePermutation>> by_length;

  std::size_t size() const;
  std::vector<std::size_t> counts() const;
  // All elements, ordered by length then window.
  std::vector<AffinePermutation> elements() const;
};

// Throws BudgetExceeded when the ball would exceed max_elements.
Ball enumerate_ball(int n, int radius, std::size_t max_elements = kDefaultBallBudget);

}  // namespace affine321

template <>
struct std::hash<affine321::AffinePermutation> : affine321::AffinePermutationHash {};
