#pragma once

// Extended affine Weyl group: permutations t -> rho^z(w(t)) = w(t) + z with
// w in W and rho(t) = t + 1. Every element has a unique such decomposition;
// it is stored decomposed.

#include <vector>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

class ExtendedAffinePermutation {
 public:
  ExtendedAffinePermutation(Int shift, AffinePermutation body)
      : shift_(shift), body_(std::move(body)) {}

  static ExtendedAffinePermutation rho(int n);
  static ExtendedAffinePermutation identity(int n);
  // Recovers z from the window sum: sum = n(n+1)/2 + z n.
  static ExtendedAffinePermutation from_window(std::vector<Int> values);

  int rank() const { return body_.rank(); }
  Int shift() const { return shift_; }
  const AffinePermutation& body() const { return body_; }
  std::vector<Int> window() const;

  Int operator()(Int t) const { return body_(t) + shift_; }

  friend bool operator==(const ExtendedAffinePermutation&,
                         const ExtendedAffinePermutation&) = default;

 private:
  Int shift_;
  AffinePermutation body_;
};

ExtendedAffinePermutation compose(const ExtendedAffinePermutation& u,
                                  const ExtendedAffinePermutation& v);
ExtendedAffinePermutation inverse(const ExtendedAffinePermutation& w);
ExtendedAffinePermutation power(const ExtendedAffinePermutation& w, int exponent);

// Length of the body.
int length(const ExtendedAffinePermutation& w);

// Both delegate to the body.
bool is_fc_extended(const ExtendedAffinePermutation& w);
bool is_321_extended(const ExtendedAffinePermutation& w);

// Bounded 321 scan on the full window of w; agrees with is_321_extended since
// adding z preserves the relative order of values.
bool is_321_direct(const ExtendedAffinePermutation& w);

}  // namespace affine321
