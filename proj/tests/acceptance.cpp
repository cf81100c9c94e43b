// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "affine321/affine321.hpp"
#include "support/oracles.hpp"

namespace {

using namespace affine321;

constexpr int kMaxLength = 8;
constexpr int kRanks[] = {3, 4, 5};
constexpr double kTimeLimitSeconds = 120.0;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

const std::map<int, std::vector<AffinePermutation>>& corpus() {
  static const auto balls = [] {
    std::map<int, std::vector<AffinePermutation>> out;
    for (int n : kRanks) out[n] = enumerate_ball(n, kMaxLength).elements();
    return out;
  }();
  return balls;
}

std::vector<Int> window_of(const AffinePermutation& w) { return {w.window().begin(), w.window().end()}; }

Outcome four_way_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [n, elements] : corpus()) {
    for (const auto& w : elements) {
      const bool i = is_fully_commutative_word(w);
      const bool ii = condition_ii_holds(w);
      const bool iii = is_321_avoiding(w);
      const bool iv = condition_iv_holds(w);
      o.expect(i == ii && ii == iii && iii == iv, format_window(w));
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < kTimeLimitSeconds, "runtime " + std::to_string(seconds) + " s");
  return o;
}

Outcome fc_cell_representatives_criterion() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const auto partitions = all_partitions(n);
    const auto small = std::count_if(partitions.begin(), partitions.end(),
                                     [](const Partition& p) { return p.largest_part() <= 2; });
    o.expect(fc_cell_count(n) == n / 2 + 1 && fc_cell_count(n) == small,
             "count for n=" + std::to_string(n));
    const auto reps = fc_cell_representatives(n);
    o.expect(static_cast<int>(reps.size()) == fc_cell_count(n), "reps for n=" + std::to_string(n));
    for (std::size_t k = 0; k < reps.size(); ++k) {
      std::vector<int> letters;
      for (std::size_t j = 1; j <= k; ++j) letters.push_back(static_cast<int>(2 * j));
      const auto w = evaluate_word(CoxeterWord(n, letters));
      std::vector<int> parts(k, 2);
      parts.resize(n - k, 1);
      o.expect(reps[k].first == w && sigma(w) == Partition(parts),
               "sigma of s_2...s_" + std::to_string(2 * k) + ", n=" + std::to_string(n));
    }
  }
  for (const auto& [n, elements] : corpus()) {
    const auto reps = fc_cell_representatives(n);
    for (const auto& w : elements) {
      if (!is_fully_commutative_word(w)) continue;
      const auto lam = sigma(w);
      const auto hits = std::count_if(reps.begin(), reps.end(),
                                      [&](const auto& r) { return r.second == lam; });
      o.expect(hits == 1, format_window(w));
    }
  }
  return o;
}

Outcome closure_criterion() {
  Outcome o;
  for (const auto& [n, elements] : corpus()) {
    std::map<Partition, std::set<bool>> realized;
    for (const auto& w : elements) {
      const auto lam = sigma(w);
      const bool fc = is_fully_commutative_word(w);
      o.expect((lam.largest_part() <= 2) == fc, format_window(w));
      realized[lam].insert(fc);
    }
    // If w is fully commutative and sigma(w) dominates sigma(y), y is too.
    for (const auto& [lam, lam_fc] : realized) {
      for (const auto& [mu, mu_fc] : realized) {
        if (lam_fc.count(true) && dominates(lam, mu)) {
          o.expect(!mu_fc.count(false),
                   format_partition(lam) + " dominates " + format_partition(mu));
        }
      }
    }
  }
  return o;
}

Outcome descent_criterion() {
  Outcome o;
  for (const auto& [n, elements] : corpus()) {
    std::vector<AffinePermutation> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(AffinePermutation::generator(n, i));
    for (const auto& w : elements) {
      const int l = length(w);
      const auto inv = inverse(w);
      for (int i = 1; i <= n; ++i) {
        const bool right_up = w(i) < w(i + 1);
        const bool left_up = inv(i) < inv(i + 1);
        o.expect((length(compose(w, gens[i - 1])) > l) == right_up, format_window(w) + " right");
        o.expect((length(compose(gens[i - 1], w)) > l) == left_up, format_window(w) + " left");
      }
    }
    for (const auto& s : gens) {
      for (Int c = -3 * n; c <= 3 * n; ++c) {
        for (Int d = c + 1; d <= 3 * n; ++d) {
          if (s(c) >= s(d)) o.expect(d == c + 1 && s(c) == d && s(d) == c, "pair");
        }
      }
    }
  }
  return o;
}

Outcome bounded_scan_criterion() {
  Outcome o;
  for (const auto& [n, elements] : corpus()) {
    for (const auto& w : elements) {
      const bool wide = oracle::has_321_in_range(window_of(w), 1 - 3 * n, n + 3 * n);
      const auto t = find_321_instance(w);
      o.expect(t.has_value() == wide, format_window(w));
      if (t) {
        o.expect(0 < t->b - t->a && t->b - t->a < n && 0 < t->c - t->b && t->c - t->b < n,
                 format_window(w) + " witness " + format_triple(*t));
      }
    }
  }
  return o;
}

Outcome rho_criterion() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto rho = ExtendedAffinePermutation::rho(n);
    for (int i = 1; i <= n; ++i) {
      const ExtendedAffinePermutation s(0, AffinePermutation::generator(n, i));
      const auto conj = compose(compose(rho, s), inverse(rho));
      const auto next = AffinePermutation::generator(n, i % n + 1);
      o.expect(conj.window() == window_of(next), "n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  for (const auto& [n, elements] : corpus()) {
    for (const auto& w : elements) {
      for (int z = -3; z <= 3; ++z) {
        const ExtendedAffinePermutation x(z, w);
        o.expect(is_321_extended(x) == is_321_direct(x) && is_fc_extended(x) == is_321_direct(x),
                 format_extended(x));
      }
    }
  }
  return o;
}

Outcome sigma_criterion() {
  Outcome o;
  for (const auto& [n, elements] : corpus()) {
    for (const auto& w : elements) {
      const auto d = chain_cover_sizes(w);
      o.expect(sigma(w) == sigma(inverse(w)), format_window(w) + " inverse");
      o.expect(chain_cover_sizes_in_window(w, 1, chain_window_bound(w, 1)) == d &&
                   chain_cover_sizes_in_window(w, 1, chain_window_bound(w, 2)) == d,
               format_window(w) + " window doubling");
    }
  }
  for (int n : {3, 4}) {
    for (const auto& w : enumerate_ball(n, 6).elements()) {
      Int lo = w(1) - 1;
      Int hi = lo;
      for (int t = 1; t <= n; ++t) {
        lo = std::min(lo, w(t) - t);
        hi = std::max(hi, w(t) - t);
      }
      const auto brute = oracle::chain_sizes_brute_force(window_of(w), static_cast<int>(hi - lo) + 1);
      o.expect(brute == chain_cover_sizes(w), format_window(w) + " brute force");
    }
  }
  return o;
}

std::string tsv_record(const AffinePermutation& w) {
  return format_window(w) + "\t" + std::to_string(length(w)) + "\t" +
         (is_321_avoiding(w) ? "true" : "false") + "\t" + serialize_partition(sigma(w));
}

Outcome rank_three_counts() {
  Outcome o;
  const auto bfs = oracle::bfs_ball(3, 3);
  std::vector<int> counts(4, 0);
  std::vector<int> fc(4, 0);
  for (const auto& [window, entry] : bfs) {
    ++counts[entry.length];
    fc[entry.length] += !oracle::has_321_in_range(window, -9, 12);
  }
  o.expect(counts == std::vector<int>{1, 3, 6, 9}, "oracle counts");
  o.expect(fc == std::vector<int>{1, 3, 6, 6}, "oracle fc counts");
  const auto ball = enumerate_ball(3, 3);
  o.expect(ball.counts() == std::vector<std::size_t>{1, 3, 6, 9}, "library counts");
  std::vector<int> lib_fc;
  for (const auto& level : ball.by_length) {
    lib_fc.push_back(static_cast<int>(std::count_if(level.begin(), level.end(), [](const auto& w) {
      return is_fully_commutative_word(w);
    })));
  }
  o.expect(lib_fc == std::vector<int>{1, 3, 6, 6}, "library fc counts");

  std::ifstream in(std::string(AFFINE321_GOLDEN_DIR) + "/enumerate_n3_L3.tsv");
  std::stringstream golden;
  golden << in.rdbuf();
  std::string produced;
  for (const auto& w : ball.elements()) produced += tsv_record(w) + "\n";
  o.expect(in.good() && produced == golden.str(), "golden file");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 four-way equivalence, n=3..5, length<=8, under 2 minutes", four_way_equivalence},
      {"AC2 fully commutative cell count and representatives", fc_cell_representatives_criterion},
      {"AC3 sigma_1<=2 iff fully commutative; dominance closure", closure_criterion},
      {"AC4 descents and generator pair behaviour", descent_criterion},
      {"AC5 bounded 321 scan vs radius-3n brute force; witness bounds", bounded_scan_criterion},
      {"AC6 rho conjugation n=3..8; extended predicates |z|<=3", rho_criterion},
      {"AC7 sigma inverse symmetry; window doubling; brute-force d_k", sigma_criterion},
      {"AC8 rank 3 counts 1,3,6,9 and fc counts 1,3,6,6; golden file", rank_three_counts},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures == 0 && o.cases > 0;
    failed += !ok;
    std::printf("[%s] %s  (%zu cases, %zu failures, %.0f ms)\n", ok ? "PASS" : "FAIL",
                label.c_str(), o.cases, o.failures, ms);
    if (!ok) std::printf("       first failure: %s\n", o.first.c_str());
  }
  std::printf("%s\n", failed == 0 ? "all acceptance criteria passed"
                                  : (std::to_string(failed) + " criteria failed").c_str());
  return failed == 0 ? 0 : 1;
}
