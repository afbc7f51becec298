#pragma once

#include <cstdint>
#include <string>

#include "grouppart/rowbound.hpp"

namespace grouppart::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::uint64_t checks = 0;
    double max_deviation = 0.0;
    std::string note;
};

// to/from plane partition are mutually inverse over all plane partitions of
// n <= max_n and all group-partitions of p-groups of order <= p^max_n, and
// image counts match PL_r(n).
SuiteResult bijection_roundtrip(std::uint64_t p, unsigned max_n);

// Character orthogonality over all j <= max_j, units a and every b mod j;
// passes when the worst deviation from {0, 1} is <= 1e-12.
SuiteResult orthogonality(std::uint64_t max_j, std::uint64_t modulus_cap = 10'000);

// Dual-path evaluation of the residue constant c_r(j).
SuiteResult residue_identity(std::uint64_t j, RowBound r, double tol,
                             std::uint64_t modulus_cap = 10'000);

// a_r(mn) = a_r(m) a_r(n) for every coprime pair with mn <= max_mn (exact).
SuiteResult multiplicativity(std::uint64_t max_mn, RowBound r);

// |J_r_euler - J_r_series| at s for every character mod j: must be <= 1e-3
// and within the combined certificate.
SuiteResult dual_path(double s, std::uint64_t j, RowBound r, std::uint64_t N, unsigned M,
                      std::uint32_t prime_cutoff, std::uint64_t modulus_cap = 10'000);

} // namespace grouppart::verify
