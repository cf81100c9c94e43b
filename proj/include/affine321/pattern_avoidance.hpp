#pragma once

#include <optional>
#include <span>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

// Positions a < b < c with w(a) > w(b) > w(c).
struct Triple {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// A 321 occurrence can always be translated so that 1 <= b <= n and moved
// within its residue classes so that 0 < b - a < n and 0 < c - b < n, hence
// only O(n^3) triples need to be examined. The witness returned is the one
// minimizing (b, c - b, b - a) lexicographically.
std::optional<Triple> find_321_instance(const AffinePermutation& w);
bool is_321_avoiding(const AffinePermutation& w);

// The same bounded scan on the raw window of any equivariant bijection
// (w(t + n) = w(t) + n), e.g. an element of the extended group.
std::optional<Triple> find_321_instance(std::span<const Int> window);

// Moves a and c inside their residue classes so that 0 < b - a' < n and
// 0 < c' - b < n while keeping w(a') > w(b) > w(c').
Triple normalize_triple(const AffinePermutation& w, const Triple& t);

// Every inversion a < b, w(a) > w(b), has w(a) > a and w(b) < b. Shifting a
// up by n keeps (a, b) an inversion and leaves w(a) - a unchanged, so pairs
// with 1 <= b <= n and b - n < a < b are enough.
bool condition_ii_holds(const AffinePermutation& w);

}  // namespace affine321
