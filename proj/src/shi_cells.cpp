#include "affine321/shi_cells.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "affine321/coxeter_words.hpp"
#include "affine321/errors.hpp"

namespace affine321 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw InvalidArgument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
    total_ += parts_[k];
  }
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

namespace {

constexpr int kMaxChainRank = 16;

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_chain_rank(int n) {
  if (n > kMaxChainRank) {
    throw InvalidArgument("chain statistics are limited to rank <= " +
                          std::to_string(kMaxChainRank));
  }
}

// Given which residue sets are single chains (a downward closed family),
// d_k = max |U| over unions U of k pairwise disjoint members.
std::vector<int> pack_chains(int n, const std::vector<char>& is_chain) {
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> fewest(full + 1, n + 1);
  fewest[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Chains through the lowest residue of mask: low | sub for sub within rest.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      if (is_chain[low | sub]) {
        fewest[mask] = std::min(fewest[mask], 1 + fewest[rest ^ sub]);
      }
      if (sub == 0) break;
    }
  }
  std::vector<int> d(n, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    for (int k = fewest[mask]; k <= n; ++k) d[k - 1] = std::max(d[k - 1], size);
  }
  return d;
}

}  // namespace

std::vector<std::uint32_t> chain_successors(const AffinePermutation& w) {
  const int n = w.rank();
  require_chain_rank(n);
  std::vector<std::uint32_t> succ(n, 0);
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= n; ++s) {
      if (s == r) continue;
      // Need an integer m with (r - s)/n < m < (w(r) - w(s))/n.
      const Int smallest = floor_div(r - s, n) + 1;
      const Int diff = w(r) - w(s);
      const Int largest = floor_div(diff - 1, n);
      if (smallest <= largest) succ[r - 1] |= 1u << (s - 1);
    }
  }
  return succ;
}

std::vector<int> chain_cover_sizes(const AffinePermutation& w) {
  const int n = w.rank();
  const auto succ = chain_successors(w);
  const std::uint32_t full = (1u << n) - 1;
  // ends[mask] = residues at which a simple path with vertex set mask can end.
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (int r = 0; r < n; ++r) ends[1u << r] |= 1u << r;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t last = ends[mask]; last != 0; last &= last - 1) {
      const int r = std::countr_zero(last);
      for (std::uint32_t next = succ[r] & ~mask; next != 0; next &= next - 1) {
        const std::uint32_t bit = next & (~next + 1);
        ends[mask | bit] |= bit;
      }
    }
  }
  std::vector<char> is_chain(full + 1, 0);
  is_chain[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) is_chain[mask] = ends[mask] != 0;
  return pack_chains(n, is_chain);
}

std::vector<int> chain_cover_sizes_in_window(const AffinePermutation& w, Int lo, Int hi) {
  const int n = w.rank();
  require_chain_rank(n);
  if (hi < lo) throw InvalidArgument("empty position window");
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Int> value(width);
  std::vector<std::uint32_t> bit(width);
  for (std::size_t p = 0; p < width; ++p) {
    value[p] = w(lo + static_cast<Int>(p));
    bit[p] = 1u << (residue(lo + static_cast<Int>(p), n) - 1);
  }
  // alive[mask][p]: some chain inside the window uses exactly the residues in
  // mask and ends at position lo + p. Masks grow, so increasing order works.
  std::vector<std::vector<char>> alive(full + 1);
  std::vector<char> is_chain(full + 1, 0);
  is_chain[0] = 1;
  for (std::size_t p = 0; p < width; ++p) {
    auto& row = alive[bit[p]];
    if (row.empty()) row.assign(width, 0);
    row[p] = 1;
  }
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (alive[mask].empty()) continue;
    for (std::size_t p = 0; p < width; ++p) {
      if (!alive[mask][p]) continue;
      is_chain[mask] = 1;
      for (std::size_t q = p + 1; q < width; ++q) {
        if (value[q] >= value[p] || (bit[q] & mask)) continue;
        auto& row = alive[mask | bit[q]];
        if (row.empty()) row.assign(width, 0);
        row[q] = 1;
      }
    }
  }
  return pack_chains(n, is_chain);
}

Int chain_window_bound(const AffinePermutation& w, int scale) {
  const auto window = w.window();
  const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
  const Int n = w.rank();
  return n + Int{scale} * n * ((*hi - *lo) + 2 * n);
}

int d_k(const AffinePermutation& w, int k) {
  if (k < 1) throw InvalidArgument("d_k needs k >= 1");
  const auto d = chain_cover_sizes(w);
  return d[std::min<std::size_t>(k, d.size()) - 1];
}

Partition partition_from_chain_sizes(const std::vector<int>& d) {
  std::vector<int> parts;
  int previous = 0;
  for (int value : d) {
    if (value == previous) break;
    parts.push_back(value - previous);
    previous = value;
  }
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] > parts[k - 1]) {
      throw std::logic_error("chain cover sizes are not concave; sigma is not a partition");
    }
  }
  return Partition(std::move(parts));
}

Partition sigma(const AffinePermutation& w) { return partition_from_chain_sizes(chain_cover_sizes(w)); }

bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size()) {
    throw InvalidArgument("cannot compare partitions of " + std::to_string(lam.size()) +
                          " and " + std::to_string(mu.size()));
  }
  int lhs = 0;
  int rhs = 0;
  const std::size_t depth = std::max(lam.parts().size(), mu.parts().size());
  for (std::size_t k = 0; k < depth; ++k) {
    lhs += k < lam.parts().size() ? lam.parts()[k] : 0;
    rhs += k < mu.parts().size() ? mu.parts()[k] : 0;
    if (lhs < rhs) return false;
  }
  return true;
}

bool leq_lr(const AffinePermutation& y, const AffinePermutation& w) {
  if (y.rank() != w.rank()) throw RankMismatch(y.rank(), w.rank());
  return dominates(sigma(y), sigma(w));
}

bool same_two_sided_cell(const AffinePermutation& y, const AffinePermutation& w) {
  if (y.rank() != w.rank()) throw RankMismatch(y.rank(), w.rank());
  return sigma(y) == sigma(w);
}

bool is_fc_by_sigma(const AffinePermutation& w) { return sigma(w).largest_part() <= 2; }

std::vector<std::pair<AffinePermutation, Partition>> fc_cell_representatives(int n) {
  require_rank(n);
  std::vector<std::pair<AffinePermutation, Partition>> out;
  for (int k = 0; 2 * k <= n; ++k) {
    std::vector<int> letters;
    for (int j = 1; j <= k; ++j) letters.push_back(2 * j);
    auto w = evaluate_word(CoxeterWord(n, std::move(letters)));
    auto lam = sigma(w);
    out.emplace_back(std::move(w), std::move(lam));
  }
  return out;
}

int fc_cell_count(int n) {
  require_rank(n);
  return n / 2 + 1;
}

}  // namespace affine321
