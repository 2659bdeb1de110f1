#pragma once
// Exact 64-bit integer helpers: overflow-checked arithmetic, floor division
// toward minus infinity, and exact integer square roots.  The level-bound
// formulas divide by negative quantities and take square roots of
// discriminants, so every helper here either returns an exact value or
// throws; nothing ever rounds through floating point.

#include <cstdint>

#include "adjoint/errors.hpp"

namespace adjoint {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// floor(a / b) toward minus infinity; b must be nonzero.
Int floor_div(Int a, Int b);

// ceil(a / b) toward plus infinity; b must be nonzero.
Int ceil_div(Int a, Int b);

// Largest s >= 0 with s^2 <= x; x must be nonnegative.
Int isqrt(Int x);

// floor((a - sqrt(delta)) / b) for delta >= 0 and b < 0, computed by
// bracketing with integer comparisons only.  An off-by-one here would
// silently corrupt a level bound, hence no floating point.
Int floor_sub_sqrt_div(Int a, Int delta, Int b);

}  // namespace adjoint
