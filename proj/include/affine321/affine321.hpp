#pragma once

#include "affine321/affine_permutation.hpp"
#include "affine321/coxeter_words.hpp"
#include "affine321/errors.hpp"
#include "affine321/extended_group.hpp"
#include "affine321/pattern_avoidance.hpp"
#include "affine321/root_system.hpp"
#include "affine321/shi_cells.hpp"
#include "affine321/text_format.hpp"
#include "affine321/verification.hpp"
