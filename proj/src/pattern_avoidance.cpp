#include "affine321/pattern_avoidance.hpp"

#include "affine321/errors.hpp"

namespace affine321 {

std::optional<Triple> find_321_instance(std::span<const Int> window) {
  const int n = static_cast<int>(window.size());
  auto w = [&](Int t) { return window_ops::apply(window, t); };
  for (Int b = 1; b <= n; ++b) {
    const Int wb = w(b);
    for (Int dc = 1; dc < n; ++dc) {
      if (w(b + dc) >= wb) continue;
      for (Int da = 1; da < n; ++da) {
        if (w(b - da) > wb) return Triple{b - da, b, b + dc};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> find_321_instance(const AffinePermutation& w) {
  return find_321_instance(w.window());
}

bool is_321_avoiding(const AffinePermutation& w) { return !find_321_instance(w).has_value(); }

namespace {

// Representative of x mod n in (lo, lo + n].
Int into_interval(Int x, Int lo, int n) {
  const Int r = residue(x - lo, n);
  return lo + r;
}

}  // namespace

Triple normalize_triple(const AffinePermutation& w, const Triple& t) {
  if (!(t.a < t.b && t.b < t.c) || !(w(t.a) > w(t.b) && w(t.b) > w(t.c))) {
    throw PreconditionViolated("normalize_triple needs a < b < c with w(a) > w(b) > w(c)");
  }
  const int n = w.rank();
  // a' = a + kn (k >= 0) and c' = c - kn (k >= 0); w(a') >= w(a), w(c') <= w(c).
  const Int a = into_interval(t.a, t.b - n, n);
  const Int c = into_interval(t.c, t.b, n);
  return Triple{a, t.b, c};
}

bool condition_ii_holds(const AffinePermutation& w) {
  const int n = w.rank();
  for (Int b = 1; b <= n; ++b) {
    const Int wb = w(b);
    for (Int a = b - n + 1; a < b; ++a) {
      const Int wa = w(a);
      if (wa > wb && !(wa > a && wb < b)) return false;
    }
  }
  return true;
}

}  // namespace affine321
