#pragma once

#include <cstdint>

#include "grouppart/count_table.hpp"
#include "grouppart/rowbound.hpp"

namespace grouppart {

inline constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

// a_r(n) for all n <= x. Blocked multiplicative sieve: each block divides out
// the primes <= sqrt(x) and multiplies PL_r at the extracted exponents (a
// leftover prime cofactor contributes PL_r(1) = 1). Blocks are independent,
// OpenMP-parallel, and write disjoint ranges, so the result is bit-identical
// for any thread count.
CountTable sieve_a_r(std::uint64_t x, RowBound r, std::uint64_t budget = kDefaultSieveCap);

// Serial reference: linear smallest-prime-factor sieve, a different algorithm
// kept for testing and benchmarking against the blocked kernel.
CountTable sieve_a_r_serial(std::uint64_t x, RowBound r, std::uint64_t budget = kDefaultSieveCap);

// b_r(n) = a_r(n) - a_{r-1}(n) with a_0(n) = [n == 1].
CountTable sieve_b_r(std::uint64_t x, unsigned r, std::uint64_t budget = kDefaultSieveCap);

} // namespace grouppart
