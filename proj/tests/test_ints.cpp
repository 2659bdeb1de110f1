#include <doctest.h>

#include <cstdint>

#include "adjoint/ints.hpp"

using namespace adjoint;

TEST_CASE("checked arithmetic is exact and throws on overflow") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_sub(2, 5) == -3);
  CHECK(checked_mul(-4, 6) == -24);
  CHECK(checked_add(INT64_MAX, 0) == INT64_MAX);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), OverflowError);
  CHECK_THROWS_AS(checked_sub(0, INT64_MIN), OverflowError);
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_div(0, 5) == 0);
  CHECK(floor_div(-5, 2) == -3);
  CHECK_THROWS_AS(floor_div(1, 0), DomainError);
}

TEST_CASE("ceil_div rounds toward plus infinity") {
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, -2) == -3);
  CHECK(ceil_div(-7, -2) == 4);
  CHECK(ceil_div(6, 3) == 2);
  CHECK(ceil_div(0, 5) == 0);
  CHECK_THROWS_AS(ceil_div(1, 0), DomainError);
}

TEST_CASE("isqrt is the exact floor square root") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(8) == 2);
  CHECK(isqrt(9) == 3);
  CHECK(isqrt(1000000) == 1000);
  CHECK(isqrt(999999) == 999);
  // The double seed is off by rounding near 2^62; the correction loop must
  // still land exactly.
  const Int big = Int{1} << 62;
  CHECK(isqrt(big) == (Int{1} << 31));
  CHECK(isqrt(big - 1) == (Int{1} << 31) - 1);
  CHECK(isqrt(INT64_MAX) == 3037000499);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
}

TEST_CASE("floor_sub_sqrt_div brackets without floating point") {
  // floor((3 - sqrt(2)) / -2) = floor(-0.79...) = -1
  CHECK(floor_sub_sqrt_div(3, 2, -2) == -1);
  // perfect square: (4 - 2) / -2 = -1 exactly
  CHECK(floor_sub_sqrt_div(4, 4, -2) == -1);
  // (0 - 3) / -3 = 1 exactly
  CHECK(floor_sub_sqrt_div(0, 9, -3) == 1);
  // floor((5 - sqrt(2)) / -1) = floor(-3.58...) = -4
  CHECK(floor_sub_sqrt_div(5, 2, -1) == -4);
  // floor((-6 - 0) / -4) = floor(1.5) = 1
  CHECK(floor_sub_sqrt_div(-6, 0, -4) == 1);
  CHECK_THROWS_AS(floor_sub_sqrt_div(1, -1, -2), DomainError);
  CHECK_THROWS_AS(floor_sub_sqrt_div(1, 1, 0), DomainError);
  CHECK_THROWS_AS(floor_sub_sqrt_div(1, 1, 2), DomainError);
}
