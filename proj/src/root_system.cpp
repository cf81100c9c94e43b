#include "affine321/root_system.hpp"

#include <algorithm>
#include <string>

#include "affine321/errors.hpp"

namespace affine321 {

Root::Root(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  require_rank(static_cast<int>(coeffs_.size()));
}

Root Root::simple(int n, int i) {
  require_rank(n);
  if (i < 1 || i > n) {
    throw InvalidArgument("simple root index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n));
  }
  std::vector<Int> c(n, 0);
  c[i - 1] = 1;
  return Root(std::move(c));
}

Root Root::delta(int n) { return Root(std::vector<Int>(n, 1)); }

bool Root::is_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c >= 0; }) &&
         std::any_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c != 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator+(const Root& other) const {
  if (rank() != other.rank()) throw RankMismatch(rank(), other.rank());
  std::vector<Int> c(coeffs_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += other.coeffs_[k];
  return Root(std::move(c));
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

Root Root::operator-() const { return scaled(-1); }

Root Root::scaled(Int factor) const {
  std::vector<Int> c(coeffs_);
  for (Int& x : c) x *= factor;
  return Root(std::move(c));
}

Int pairing(const Root& lhs, const Root& rhs) {
  if (lhs.rank() != rhs.rank()) throw RankMismatch(lhs.rank(), rhs.rank());
  const int n = lhs.rank();
  Int total = 0;
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    const int prev = i == 1 ? n : i - 1;
    // Row i of the affine Cartan matrix: 2 on the diagonal, -1 at both
    // cyclic neighbours (distinct because n >= 3).
    total += lhs[i] * (2 * rhs[i] - rhs[next] - rhs[prev]);
  }
  return total;
}

Root simple_reflection_action(int i, const Root& r) {
  const Root alpha = Root::simple(r.rank(), i);
  return r - alpha.scaled(pairing(r, alpha));
}

Root act(const CoxeterWord& word, const Root& r) {
  if (word.rank() != r.rank()) throw RankMismatch(word.rank(), r.rank());
  Root out = r;
  const auto letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out = simple_reflection_action(*it, out);
  }
  return out;
}

Root rho_action(const Root& r, Int power) {
  const int n = r.rank();
  const Int shift = ((power % n) + n) % n;
  std::vector<Int> c(n);
  for (int i = 0; i < n; ++i) c[(i + shift) % n] = r.coeffs()[i];
  return Root(std::move(c));
}

std::vector<Root> inversion_set(const CoxeterWord& reduced_word) {
  const int n = reduced_word.rank();
  const auto letters = reduced_word.letters();
  std::vector<Root> out;
  out.reserve(letters.size());
  // Suffix construction: s_{i_r} ... s_{i_{k+1}} alpha_{i_k}.
  for (std::size_t k = letters.size(); k-- > 0;) {
    Root r = Root::simple(n, letters[k]);
    for (std::size_t j = k + 1; j < letters.size(); ++j) {
      r = simple_reflection_action(letters[j], r);
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> inversion_set(const AffinePermutation& w) {
  return inversion_set(canonical_reduced_word(w));
}

bool no_summable_pair(std::span<const Root> roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (pairing(roots[i], roots[j]) == -1) return false;
    }
  }
  return true;
}

bool condition_iv_holds(const AffinePermutation& w) {
  const auto roots = inversion_set(w);
  return no_summable_pair(roots);
}

}  // namespace affine321
