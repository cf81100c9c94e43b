#include "affine321/affine_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "affine321/errors.hpp"

namespace affine321 {

void require_rank(int n) {
  if (n < 3) {
    throw InvalidArgument("rank must be at least 3, got " + std::to_string(n));
  }
}

namespace window_ops {

Int apply(std::span<const Int> window, Int t) {
  const int n = static_cast<int>(window.size());
  const Int r = residue(t, n);
  return window[r - 1] + (t - r);
}

void require_distinct_residues(std::span<const Int> window) {
  const int n = static_cast<int>(window.size());
  std::vector<int> seen(n + 1, 0);
  for (std::size_t k = 0; k < window.size(); ++k) {
    const Int r = residue(window[k], n);
    if (seen[r] != 0) {
      throw InvalidArgument("residue collision: positions " + std::to_string(seen[r]) +
                            " and " + std::to_string(k + 1) + " are congruent mod " +
                            std::to_string(n));
    }
    seen[r] = static_cast<int>(k + 1);
  }
}

std::vector<Int> compose(std::span<const Int> outer, std::span<const Int> inner) {
  std::vector<Int> out(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) out[k] = apply(outer, inner[k]);
  return out;
}

std::vector<Int> invert(std::span<const Int> window) {
  const int n = static_cast<int>(window.size());
  std::vector<Int> out(n);
  // w(t) = v with v = r + kn  ==>  w^{-1}(r) = t - kn.
  for (int t = 1; t <= n; ++t) {
    const Int v = window[t - 1];
    const Int r = residue(v, n);
    out[r - 1] = t - (v - r);
  }
  return out;
}

}  // namespace window_ops

AffinePermutation AffinePermutation::from_window(std::vector<Int> window) {
  const int n = static_cast<int>(window.size());
  require_rank(n);
  window_ops::require_distinct_residues(window);
  const Int sum = std::accumulate(window.begin(), window.end(), Int{0});
  const Int expected = Int{n} * (n + 1) / 2;
  if (sum != expected) {
    throw InvalidArgument("window sum " + std::to_string(sum) + " differs from n(n+1)/2 = " +
                          std::to_string(expected));
  }
  return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::identity(int n) {
  require_rank(n);
  std::vector<Int> window(n);
  std::iota(window.begin(), window.end(), Int{1});
  return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::generator(int n, int i) {
  require_rank(n);
  if (i < 1 || i > n) {
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n));
  }
  const Int lo = residue(i, n);
  const Int hi = residue(i + 1, n);
  std::vector<Int> window(n);
  for (int t = 1; t <= n; ++t) {
    if (t == hi) {
      window[t - 1] = t - 1;
    } else if (t == lo) {
      window[t - 1] = t + 1;
    } else {
      window[t - 1] = t;
    }
  }
  return AffinePermutation(std::move(window));
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank());
  for (Int v : w.window()) {
    h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CoxeterWord::CoxeterWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  require_rank(n);
  for (int s : letters_) {
    if (s < 1 || s > n) {
      throw InvalidArgument("word letter " + std::to_string(s) + " outside 1.." +
                            std::to_string(n));
    }
  }
}

Int apply(const AffinePermutation& w, Int t) { return w(t); }

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  return AffinePermutation::from_window(window_ops::compose(u.window(), v.window()));
}

AffinePermutation inverse(const AffinePermutation& w) {
  return AffinePermutation::from_window(window_ops::invert(w.window()));
}

namespace {

void require_index(const AffinePermutation& w, int i) {
  if (i < 1 || i > w.rank()) {
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(w.rank()));
  }
}

// w s_i swaps the window values at positions i and i+1 (with wraparound at n).
void right_multiply_in_place(std::vector<Int>& window, int i) {
  const int n = static_cast<int>(window.size());
  if (i < n) {
    std::swap(window[i - 1], window[i]);
  } else {
    const Int first = window[0];
    window[0] = window[n - 1] - n;
    window[n - 1] = first + n;
  }
}

int smallest_descent(std::span<const Int> window) {
  const int n = static_cast<int>(window.size());
  for (int i = 1; i < n; ++i) {
    if (window[i - 1] > window[i]) return i;
  }
  return window[n - 1] > window[0] + n ? n : 0;
}

}  // namespace

bool is_right_descent(const AffinePermutation& w, int i) {
  require_index(w, i);
  return w(i) > w(i + 1);
}

bool is_left_descent(const AffinePermutation& w, int i) {
  require_index(w, i);
  const auto inv = window_ops::invert(w.window());
  return window_ops::apply(inv, i) > window_ops::apply(inv, i + 1);
}

namespace {

std::vector<int> strip_descents(const AffinePermutation& w) {
  std::vector<Int> window(w.window().begin(), w.window().end());
  std::vector<int> stripped;
  while (int i = smallest_descent(window)) {
    right_multiply_in_place(window, i);
    stripped.push_back(i);
  }
  return stripped;
}

}  // namespace

int length(const AffinePermutation& w) { return static_cast<int>(strip_descents(w).size()); }

Int inversion_count(const AffinePermutation& w) {
  const auto window = w.window();
  const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
  const Int spread = *hi - *lo;
  const int n = w.rank();
  Int count = 0;
  for (int i = 1; i <= n; ++i) {
    const Int wi = w(i);
    for (Int j = i + 1; j <= i + spread + n; ++j) {
      if (wi > w(j)) ++count;
    }
  }
  return count;
}

CoxeterWord canonical_reduced_word(const AffinePermutation& w) {
  auto letters = strip_descents(w);
  std::reverse(letters.begin(), letters.end());
  return CoxeterWord(w.rank(), std::move(letters));
}

std::size_t Ball::size() const {
  std::size_t total = 0;
  for (const auto& level : by_length) total += level.size();
  return total;
}

std::vector<std::size_t> Ball::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_length) out.push_back(level.size());
  return out;
}

std::vector<AffinePermutation> Ball::elements() const {
  std::vector<AffinePermutation> out;
  out.reserve(size());
  for (const auto& level : by_length) out.insert(out.end(), level.begin(), level.end());
  return out;
}

Ball enumerate_ball(int n, int radius, std::size_t max_elements) {
  require_rank(n);
  if (radius < 0) throw InvalidArgument("length bound must be nonnegative");
  Ball ball;
  ball.rank = n;
  std::unordered_set<AffinePermutation> seen;
  auto identity = AffinePermutation::identity(n);
  seen.insert(identity);
  ball.by_length.push_back({identity});
  std::vector<AffinePermutation> generators;
  for (int i = 1; i <= n; ++i) generators.push_back(AffinePermutation::generator(n, i));

  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<AffinePermutation> next;
    for (const auto& w : ball.by_length.back()) {
      for (const auto& s : generators) {
        auto ws = compose(w, s);
        if (seen.insert(ws).second) {
          if (seen.size() > max_elements) {
            throw BudgetExceeded("ball of rank " + std::to_string(n) + " and radius " +
                                 std::to_string(radius) + " exceeds " +
                                 std::to_string(max_elements) + " elements");
          }
          next.push_back(std::move(ws));
        }
      }
    }
    std::sort(next.begin(), next.end());
    ball.by_length.push_back(std::move(next));
  }
  return ball;
}

}  // namespace affine321
