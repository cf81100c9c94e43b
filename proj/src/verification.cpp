#include "affine321/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "affine321/coxeter_words.hpp"
#include "affine321/errors.hpp"
#include "affine321/extended_group.hpp"
#include "affine321/pattern_avoidance.hpp"
#include "affine321/root_system.hpp"
#include "affine321/shi_cells.hpp"
#include "affine321/text_format.hpp"

namespace affine321 {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  void expect(bool ok, const std::string& what) {
    ++result_.population;
    if (!ok) {
      ++result_.failures;
      if (!result_.first_failure) result_.first_failure = what;
    }
  }

  CheckResult finish() {
    const auto stop = std::chrono::steady_clock::now();
    result_.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start_).count();
    return result_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  CheckResult result_;
};

std::optional<Triple> brute_force_321(const AffinePermutation& w, Int lo, Int hi) {
  for (Int b = lo; b <= hi; ++b) {
    const Int wb = w(b);
    for (Int a = lo; a < b; ++a) {
      if (w(a) <= wb) continue;
      for (Int c = b + 1; c <= hi; ++c) {
        if (w(c) < wb) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_known_check(std::string_view name) {
  return std::find(std::begin(kCheckNames), std::end(kCheckNames), name) !=
         std::end(kCheckNames);
}

Verifier::Verifier(const VerifyOptions& options)
    : options_(options),
      ball_(enumerate_ball(options.rank, options.radius, options.budget)),
      elements_(ball_.elements()) {}

std::vector<std::size_t> Verifier::fc_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : ball_.by_length) {
    out.push_back(static_cast<std::size_t>(
        std::count_if(level.begin(), level.end(), [](const auto& w) { return is_321_avoiding(w); })));
  }
  return out;
}

CheckResult Verifier::run(std::string_view name) const {
  if (name == "thm27") return check_equivalence();
  if (name == "cells") return check_cells();
  if (name == "lemma25") return check_descents();
  if (name == "lemma42") return check_rho_conjugation();
  if (name == "prop23") return check_bounded_scan();
  if (name == "prop51") return check_fc_cells();
  if (name == "sigma-inverse") return check_sigma_inverse();
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

CheckResult Verifier::check_equivalence() const {
  Tally tally("thm27");
  for (const auto& w : elements_) {
    const bool by_words = is_fully_commutative_word(w);
    const bool by_pairs = condition_ii_holds(w);
    const bool by_pattern = is_321_avoiding(w);
    const bool by_roots = condition_iv_holds(w);
    std::ostringstream os;
    os << format_window(w) << ": words=" << by_words << " pairs=" << by_pairs
       << " pattern=" << by_pattern << " roots=" << by_roots;
    tally.expect(by_words == by_pairs && by_pairs == by_pattern && by_pattern == by_roots,
                 os.str());
  }
  return tally.finish();
}

CheckResult Verifier::check_cells() const {
  Tally tally("cells");
  std::map<Partition, std::pair<std::size_t, std::size_t>> realized;  // sigma -> (fc, total)
  for (const auto& w : elements_) {
    const auto d = chain_cover_sizes(w);
    const auto lam = partition_from_chain_sizes(d);
    const bool fc = is_321_avoiding(w);
    tally.expect((lam.largest_part() <= 2) == fc,
                 format_window(w) + ": sigma " + format_partition(lam) + " vs fc=" +
                     std::to_string(fc));
    auto& entry = realized[lam];
    entry.first += fc ? 1 : 0;
    entry.second += 1;

    const int n = w.rank();
    bool shape_ok = d.back() == n && d.front() >= 1;
    for (std::size_t k = 1; k < d.size(); ++k) {
      shape_ok &= d[k] >= d[k - 1] && d[k] - d[k - 1] <= d[0];
      if (k >= 2) shape_ok &= d[k] - d[k - 1] <= d[k - 1] - d[k - 2];
    }
    shape_ok &= d[static_cast<std::size_t>(lam.part_count()) - 1] == n;
    tally.expect(shape_ok, format_window(w) + ": malformed chain size sequence");

    const auto base = chain_cover_sizes_in_window(w, 1, chain_window_bound(w, 1));
    const auto doubled = chain_cover_sizes_in_window(w, 1, chain_window_bound(w, 2));
    tally.expect(base == d && doubled == d, format_window(w) + ": window route disagrees");
  }
  // A cell made of fully commutative elements dominates only such cells.
  for (const auto& [lam, lam_counts] : realized) {
    const bool lam_fc = lam_counts.first == lam_counts.second;
    tally.expect(lam_fc || lam_counts.first == 0,
                 "cell " + format_partition(lam) + " mixes fc and non-fc elements");
    if (!lam_fc) continue;
    for (const auto& [mu, mu_counts] : realized) {
      if (!dominates(lam, mu)) continue;
      tally.expect(mu_counts.first == mu_counts.second,
                   "cell " + format_partition(mu) + " below fc cell " + format_partition(lam) +
                       " is not fully commutative");
    }
  }
  return tally.finish();
}

CheckResult Verifier::check_descents() const {
  Tally tally("lemma25");
  const int n = options_.rank;
  for (const auto& w : elements_) {
    const int l = length(w);
    for (int i = 1; i <= n; ++i) {
      const auto s = AffinePermutation::generator(n, i);
      const int right = length(compose(w, s));
      const int left = length(compose(s, w));
      tally.expect(right == (is_right_descent(w, i) ? l - 1 : l + 1),
                   format_window(w) + ": right multiplication by s_" + std::to_string(i));
      tally.expect(left == (is_left_descent(w, i) ? l - 1 : l + 1),
                   format_window(w) + ": left multiplication by s_" + std::to_string(i));
    }
  }
  const Int radius = Int{options_.window_radius} * n;
  for (int i = 1; i <= n; ++i) {
    const auto s = AffinePermutation::generator(n, i);
    for (Int c = -radius; c <= radius; ++c) {
      for (Int d = c + 1; d <= radius; ++d) {
        if (s(c) < s(d)) continue;
        tally.expect(d == c + 1 && s(c) == d && s(d) == c,
                     "s_" + std::to_string(i) + " at c=" + std::to_string(c) +
                         ", d=" + std::to_string(d));
      }
    }
  }
  return tally.finish();
}

CheckResult Verifier::check_rho_conjugation() const {
  Tally tally("lemma42");
  const int n = options_.rank;
  const auto rho = ExtendedAffinePermutation::rho(n);
  const auto rho_inv = inverse(rho);
  for (int i = 1; i <= n; ++i) {
    const ExtendedAffinePermutation s(0, AffinePermutation::generator(n, i));
    const auto conj = compose(compose(rho, s), rho_inv);
    const auto expected = AffinePermutation::generator(n, i == n ? 1 : i + 1);
    tally.expect(conj.shift() == 0 && conj.body() == expected,
                 "rho s_" + std::to_string(i) + " rho^-1 = " + format_extended(conj));
  }
  for (const auto& w : elements_) {
    const bool pattern = is_321_avoiding(w);
    const bool roots = condition_iv_holds(w);
    for (int z = -3; z <= 3; ++z) {
      const ExtendedAffinePermutation ext(z, w);
      const auto round_trip = ExtendedAffinePermutation::from_window(ext.window());
      tally.expect(round_trip == ext, format_extended(ext) + ": decomposition round trip");
      tally.expect(is_321_extended(ext) == is_321_direct(ext) && is_321_direct(ext) == pattern,
                   format_extended(ext) + ": direct scan disagrees with body");
      tally.expect(is_fc_extended(ext) == roots,
                   format_extended(ext) + ": root criterion disagrees");
    }
  }
  return tally.finish();
}

CheckResult Verifier::check_bounded_scan() const {
  Tally tally("prop23");
  const int n = options_.rank;
  const Int radius = Int{options_.window_radius} * n;
  for (const auto& w : elements_) {
    const auto bounded = find_321_instance(w);
    const auto wide = brute_force_321(w, 1 - radius, n + radius);
    tally.expect(bounded.has_value() == wide.has_value(),
                 format_window(w) + ": bounded scan disagrees with brute force");
    if (bounded) {
      const auto [a, b, c] = *bounded;
      const bool residues_distinct =
          residue(a, n) != residue(b, n) && residue(b, n) != residue(c, n) &&
          residue(a, n) != residue(c, n);
      tally.expect(0 < b - a && b - a < n && 0 < c - b && c - b < n && 1 <= b && b <= n &&
                       w(a) > w(b) && w(b) > w(c) && residues_distinct,
                   format_window(w) + ": witness " + format_triple(*bounded) +
                       " violates the bounds");
    }
    if (wide) {
      const auto normal = normalize_triple(w, *wide);
      const auto [a, b, c] = normal;
      tally.expect(0 < b - a && b - a < n && 0 < c - b && c - b < n && w(a) > w(b) &&
                       w(b) > w(c) && residue(a, n) == residue(wide->a, n) &&
                       residue(c, n) == residue(wide->c, n) && normalize_triple(w, normal) == normal,
                   format_window(w) + ": normalizing " + format_triple(*wide));
    }
  }
  return tally.finish();
}

CheckResult Verifier::check_fc_cells() const {
  Tally tally("prop51");
  const int n = options_.rank;
  const auto reps = fc_cell_representatives(n);
  const auto partitions = all_partitions(n);
  const auto small_parts = std::count_if(partitions.begin(), partitions.end(),
                                         [](const Partition& p) { return p.largest_part() <= 2; });
  tally.expect(fc_cell_count(n) == small_parts && static_cast<int>(reps.size()) == fc_cell_count(n),
               "cell count " + std::to_string(fc_cell_count(n)) + " vs " +
                   std::to_string(small_parts) + " partitions with parts <= 2");
  std::set<Partition> distinct;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::vector<int> parts(k, 2);
    parts.resize(n - k, 1);
    const Partition expected{parts};
    tally.expect(reps[k].second == expected,
                 "representative " + std::to_string(k) + " has sigma " +
                     format_partition(reps[k].second));
    distinct.insert(reps[k].second);
  }
  tally.expect(distinct.size() == reps.size(), "representative partitions are not distinct");
  for (const auto& w : elements_) {
    if (!is_321_avoiding(w)) continue;
    const auto lam = sigma(w);
    const auto hits = std::count_if(reps.begin(), reps.end(),
                                    [&](const auto& rep) { return rep.second == lam; });
    tally.expect(hits == 1, format_window(w) + ": sigma " + format_partition(lam) +
                                " matches " + std::to_string(hits) + " representatives");
  }
  return tally.finish();
}

CheckResult Verifier::check_sigma_inverse() const {
  Tally tally("sigma-inverse");
  for (const auto& w : elements_) {
    const auto lam = sigma(w);
    const auto lam_inv = sigma(inverse(w));
    tally.expect(lam == lam_inv, format_window(w) + ": sigma " + format_partition(lam) +
                                     " vs inverse " + format_partition(lam_inv));
  }
  return tally.finish();
}

}  // namespace affine321
