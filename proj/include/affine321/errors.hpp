#pragma once

#include <stdexcept>
#include <string>

namespace affine321 {

// Input that violates a structural invariant (window, word, partition, rank).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankMismatch : public InvalidArgument {
 public:
  RankMismatch(int lhs, int rhs)
      : InvalidArgument("rank mismatch: " + std::to_string(lhs) + " vs " +
                        std::to_string(rhs)) {}
};

// An operation was called outside its documented precondition.
class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configurable size cap was hit. Callers must treat the result as
// incomplete, never as an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace affine321
