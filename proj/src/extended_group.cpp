#include "affine321/extended_group.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

#include "affine321/coxeter_words.hpp"
#include "affine321/errors.hpp"
#include "affine321/pattern_avoidance.hpp"

namespace affine321 {

ExtendedAffinePermutation ExtendedAffinePermutation::rho(int n) {
  return ExtendedAffinePermutation(1, AffinePermutation::identity(n));
}

ExtendedAffinePermutation ExtendedAffinePermutation::identity(int n) {
  return ExtendedAffinePermutation(0, AffinePermutation::identity(n));
}

ExtendedAffinePermutation ExtendedAffinePermutation::from_window(std::vector<Int> values) {
  const int n = static_cast<int>(values.size());
  require_rank(n);
  window_ops::require_distinct_residues(values);
  const Int excess =
      std::accumulate(values.begin(), values.end(), Int{0}) - Int{n} * (n + 1) / 2;
  // Distinct residues force sum = n(n+1)/2 mod n.
  assert(excess % n == 0);
  const Int z = excess / n;
  for (Int& v : values) v -= z;
  return ExtendedAffinePermutation(z, AffinePermutation::from_window(std::move(values)));
}

std::vector<Int> ExtendedAffinePermutation::window() const {
  std::vector<Int> out(body_.window().begin(), body_.window().end());
  for (Int& v : out) v += shift_;
  return out;
}

ExtendedAffinePermutation compose(const ExtendedAffinePermutation& u,
                                  const ExtendedAffinePermutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  const auto uw = u.window();
  const auto vw = v.window();
  return ExtendedAffinePermutation::from_window(window_ops::compose(uw, vw));
}

ExtendedAffinePermutation inverse(const ExtendedAffinePermutation& w) {
  const auto window = w.window();
  return ExtendedAffinePermutation::from_window(window_ops::invert(window));
}

ExtendedAffinePermutation power(const ExtendedAffinePermutation& w, int exponent) {
  auto base = exponent < 0 ? inverse(w) : w;
  auto out = ExtendedAffinePermutation::identity(w.rank());
  for (int k = 0; k < std::abs(exponent); ++k) out = compose(out, base);
  return out;
}

int length(const ExtendedAffinePermutation& w) { return length(w.body()); }

bool is_fc_extended(const ExtendedAffinePermutation& w) {
  return is_fully_commutative_word(w.body());
}

bool is_321_extended(const ExtendedAffinePermutation& w) { return is_321_avoiding(w.body()); }

bool is_321_direct(const ExtendedAffinePermutation& w) {
  const auto window = w.window();
  return !find_321_instance(window).has_value();
}

}  // namespace affine321
