#include "affine321/coxeter_words.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "affine321/errors.hpp"

namespace affine321 {

AffinePermutation evaluate_word(const CoxeterWord& word) {
  auto w = AffinePermutation::identity(word.rank());
  for (int s : word.letters()) w = compose(w, AffinePermutation::generator(word.rank(), s));
  return w;
}

bool is_reduced(const CoxeterWord& word) {
  return static_cast<std::size_t>(length(evaluate_word(word))) == word.size();
}

std::vector<CoxeterWord> commutation_class(const CoxeterWord& word, std::size_t max_words) {
  if (!is_reduced(word)) throw PreconditionViolated("commutation_class needs a reduced word");
  const int n = word.rank();
  using Letters = std::vector<int>;
  std::set<Letters> seen{Letters(word.letters().begin(), word.letters().end())};
  std::vector<Letters> stack{*seen.begin()};
  while (!stack.empty()) {
    Letters current = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k + 1 < current.size(); ++k) {
      const int a = current[k];
      const int b = current[k + 1];
      if (a == b || adjacent(a, b, n)) continue;
      Letters moved = current;
      std::swap(moved[k], moved[k + 1]);
      if (seen.insert(moved).second) {
        if (seen.size() > max_words) {
          throw BudgetExceeded("commutation class exceeds " + std::to_string(max_words) +
                               " words");
        }
        stack.push_back(std::move(moved));
      }
    }
  }
  std::vector<CoxeterWord> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.emplace_back(n, letters);
  return out;
}

bool contains_braid_factor(const CoxeterWord& word) {
  const auto letters = word.letters();
  for (std::size_t k = 0; k + 2 < letters.size(); ++k) {
    if (letters[k] == letters[k + 2] && adjacent(letters[k], letters[k + 1], word.rank())) {
      return true;
    }
  }
  return false;
}

bool is_fully_commutative_word(const AffinePermutation& w, std::size_t max_words) {
  const auto members = commutation_class(canonical_reduced_word(w), max_words);
  return std::none_of(members.begin(), members.end(), contains_braid_factor);
}

bool check_consecutive_occurrences(const CoxeterWord& word) {
  if (!is_reduced(word)) throw PreconditionViolated("word is not reduced");
  if (!is_fully_commutative_word(evaluate_word(word))) {
    throw PreconditionViolated("word does not represent a fully commutative element");
  }
  const int n = word.rank();
  const auto letters = word.letters();
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const int s = letters[j];
    const int left = s == 1 ? n : s - 1;
    const int right = s == n ? 1 : s + 1;
    bool saw_left = false;
    bool saw_right = false;
    for (std::size_t k = j + 1; k < letters.size(); ++k) {
      if (letters[k] == s) {
        if (!saw_left || !saw_right) return false;
        break;
      }
      saw_left |= letters[k] == left;
      saw_right |= letters[k] == right;
    }
  }
  return true;
}

}  // namespace affine321
