#pragma once

// Exhaustive checks of the structural theorems over a ball of W(A~_{n-1}).
// Each check reports how many cases it examined and how many failed; a
// failure message describes the first offending case.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

struct CheckResult {
  std::string name;
  std::size_t population = 0;
  std::size_t failures = 0;
  double elapsed_ms = 0.0;
  std::optional<std::string> first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  int rank = 3;
  int radius = 4;                // length bound of the ball
  int window_radius = 3;         // brute-force scans use positions within radius * n
  std::size_t budget = kDefaultBallBudget;
};

inline constexpr std::string_view kCheckNames[] = {
    "thm27", "cells", "lemma25", "lemma42", "prop23", "prop51", "sigma-inverse"};

bool is_known_check(std::string_view name);

// Throws BudgetExceeded if the ball cannot be built within the budget.
class Verifier {
 public:
  explicit Verifier(const VerifyOptions& options);

  const Ball& ball() const { return ball_; }
  const std::vector<AffinePermutation>& elements() const { return elements_; }
  // Fully commutative elements per length.
  std::vector<std::size_t> fc_counts() const;

  CheckResult run(std::string_view name) const;

  // Four-way agreement of the fully commutative / 321-avoiding criteria.
  CheckResult check_equivalence() const;
  // sigma_1 <= 2 iff fully commutative; downward closure under dominance;
  // chain size sequence shape; window-doubling stability of d_k.
  CheckResult check_cells() const;
  // Length change under one-sided multiplication by generators, and the
  // behaviour of generators on pairs c < d.
  CheckResult check_descents() const;
  // rho s_i rho^{-1} = s_{i+1}; extended-group predicates for |z| <= 3.
  CheckResult check_rho_conjugation() const;
  // Bounded 321 scan against a wide brute force; witness bounds.
  CheckResult check_bounded_scan() const;
  // Cell representatives of fully commutative elements.
  CheckResult check_fc_cells() const;
  CheckResult check_sigma_inverse() const;

 private:
  VerifyOptions options_;
  Ball ball_;
  std::vector<AffinePermutation> elements_;
};

}  // namespace affine321
