#pragma once

// Text forms used by reports and the command line:
//   window     [2,1,3]
//   word       1.2.1   (the empty word is the empty string)
//   root       (1,1,0)
//   partition  (2,2,1) for display, 2,2,1 in records
//   triple     (a,b,c)

#include <string>
#include <string_view>
#include <vector>

#include "affine321/affine_permutation.hpp"
#include "affine321/extended_group.hpp"
#include "affine321/pattern_avoidance.hpp"
#include "affine321/root_system.hpp"
#include "affine321/shi_cells.hpp"

namespace affine321 {

// Integers only; no invariant checks.
std::vector<Int> parse_integer_list(std::string_view text);

// Throws InvalidArgument naming the violated invariant.
AffinePermutation parse_window(std::string_view text);
CoxeterWord parse_word(int n, std::string_view text);

std::string format_window(std::span<const Int> window);
std::string format_window(const AffinePermutation& w);
std::string format_word(const CoxeterWord& word);
std::string format_root(const Root& r);
std::string format_partition(const Partition& p);
std::string serialize_partition(const Partition& p);
std::string format_triple(const Triple& t);
// "ρ^z · [window of body]"
std::string format_extended(const ExtendedAffinePermutation& w);

}  // namespace affine321
