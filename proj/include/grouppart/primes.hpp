#pragma once

#include <cstdint>
#include <vector>

namespace grouppart {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    unsigned e;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1u << 20;

// Trial division up to trial_bound, then a primality check on the cofactor.
// A composite cofactor beyond the bound is rejected (ResourceLimitError)
// rather than silently mis-factored. Primes ascending in the result.
std::vector<PrimePower> factorize(std::uint64_t n, std::uint64_t trial_bound = kDefaultTrialBound);

} // namespace grouppart
