#include "adjoint/ints.hpp"

#include <cmath>
#include <string>

namespace adjoint {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " +
                        std::to_string(b));
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  return r;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw DomainError("floor_div: division by zero");
  Int q = a / b;
  Int r = a % b;
  // C++ truncates toward zero; fix up when the remainder has the wrong sign.
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b == 0) throw DomainError("ceil_div: division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

namespace {

// s^2 <= x, with the square taken in 128 bits so large s cannot wrap.
bool square_at_most(Int s, Int x) {
  if (s < 0) return true;
  return static_cast<__int128>(s) * s <= static_cast<__int128>(x);
}

}  // namespace

Int isqrt(Int x) {
  if (x < 0) throw DomainError("isqrt of negative value " + std::to_string(x));
  if (x < 2) return x;
  // Seed from the double sqrt, then correct; the loop moves at most a couple
  // of steps because the seed is already within rounding error.
  Int s = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (s > 0 && !square_at_most(s, x)) --s;
  while (square_at_most(s + 1, x)) ++s;
  return s;
}

Int floor_sub_sqrt_div(Int a, Int delta, Int b) {
  if (delta < 0)
    throw DomainError("floor_sub_sqrt_div: negative radicand " +
                      std::to_string(delta));
  if (b >= 0)
    throw DomainError("floor_sub_sqrt_div: denominator must be negative");
  // (a - sqrt(delta)) / b == (sqrt(delta) - a) / m with m = -b > 0.
  // We want the largest k with k*m <= sqrt(delta) - a, i.e. with
  // k*m + a <= 0 or (k*m + a)^2 <= delta.
  const Int m = checked_sub(0, b);
  const Int r = isqrt(delta);  // r <= sqrt(delta) < r + 1
  auto below = [&](Int k) {
    __int128 t = static_cast<__int128>(k) * m + a;
    if (t <= 0) return true;
    return t * t <= static_cast<__int128>(delta);
  };
  Int k = floor_div(checked_sub(r, a), m);  // below(k) always holds here
  while (below(k + 1)) ++k;
  return k;
}

}  // namespace adjoint
