#ifndef LCMLAT_EXACT_LINALG_HPP
#define LCMLAT_EXACT_LINALG_HPP

#include <cstdint>
#include <vector>

#include "lcmlat/field.hpp"

namespace lcmlat {

/// Dense integer matrix, row major. Entries are small on input (boundary
/// matrices are 0/±1); elimination promotes to arbitrary precision.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers. No floating point, no rounding.
std::size_t rank_over_rationals(const IntMatrix& matrix);

/// Rank over F_p by modular Gaussian elimination.
std::size_t rank_mod_p(const IntMatrix& matrix, std::int64_t p);

/// Rank over the requested field.
std::size_t matrix_rank(const IntMatrix& matrix, const FieldSpec& field);

}  // namespace lcmlat

#endif
