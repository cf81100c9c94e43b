#pragma once

#include <cstddef>
#include <vector>

#include "affine321/affine_permutation.hpp"

namespace affine321 {

inline constexpr std::size_t kDefaultClassBudget = 1'000'000;

// Left-to-right product s_{i_1} s_{i_2} ... s_{i_r}.
AffinePermutation evaluate_word(const CoxeterWord& word);

bool is_reduced(const CoxeterWord& word);

// Closure of a reduced word under swapping adjacent commuting letters,
// sorted lexicographically. Throws PreconditionViolated on a non-reduced
// word and BudgetExceeded past max_words.
std::vector<CoxeterWord> commutation_class(const CoxeterWord& word,
                                           std::size_t max_words = kDefaultClassBudget);

// True iff the word has consecutive letters i, j, i with s_i, s_j adjacent.
bool contains_braid_factor(const CoxeterWord& word);

// Full commutativity decided on words: no member of the commutation class of
// the canonical reduced word contains a braid factor s_i s_j s_i. One class
// suffices because the reduced words of a fully commutative element form a
// single commutation class.
bool is_fully_commutative_word(const AffinePermutation& w,
                               std::size_t max_words = kDefaultClassBudget);

// Between any two consecutive occurrences of a letter s, both generators
// that fail to commute with s occur. Requires a reduced word of a fully
// commutative element (PreconditionViolated otherwise).
bool check_consecutive_occurrences(const CoxeterWord& word);

}  // namespace affine321
