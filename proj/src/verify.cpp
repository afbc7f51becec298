#include "grouppart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "grouppart/asymptotics.hpp"
#include "grouppart/dirichlet.hpp"
#include "grouppart/group_partition.hpp"
#include "grouppart/lfunctions.hpp"
#include "grouppart/plane_partitions.hpp"
#include "grouppart/sieve.hpp"

namespace grouppart::verify {

SuiteResult bijection_roundtrip(std::uint64_t p, unsigned max_n) {
    SuiteResult res{"bijection", true, 0, 0.0, ""};
    const auto pl_inf = plane_partition_counts(max_n, RowBound::inf());
    for (unsigned n = 0; n <= max_n; ++n) {
        std::uint64_t pn = 1;
        for (unsigned i = 0; i < n; ++i) pn *= p;

        // plane partition -> group-partition -> plane partition
        const auto pps = enumerate_plane_partitions(n, RowBound::inf());
        if (Bigint(pps.size()) != pl_inf[n]) res.pass = false;
        for (const auto& pp : pps) {
            ++res.checks;
            const auto gp = from_plane_partition(pp, p);
            if (!is_valid_group_partition(gp) || to_plane_partition(gp) != pp) {
                res.pass = false;
                res.note = "from/to round-trip failed at n=" + std::to_string(n);
            }
        }

        // group-partition -> plane partition -> group-partition; image count
        Bigint chains_total = 0;
        for (const auto& g : groups_of_order(pn)) {
            const auto chains = enumerate_group_partitions(g, RowBound::inf());
            chains_total += static_cast<std::uint64_t>(chains.size());
            for (const auto& gp : chains) {
                ++res.checks;
                const auto pp = to_plane_partition(gp);
                if (!is_valid_plane_partition(pp) || weight(pp) != n ||
                    from_plane_partition(pp, p) != gp) {
                    res.pass = false;
                    res.note = "to/from round-trip failed at n=" + std::to_string(n);
                }
            }
        }
        if (chains_total != pl_inf[n]) {
            res.pass = false;
            res.note = "image count mismatch at n=" + std::to_string(n);
        }
    }
    return res;
}

SuiteResult orthogonality(std::uint64_t max_j, std::uint64_t modulus_cap) {
    SuiteResult res{"orthogonality", true, 0, 0.0, ""};
    for (std::uint64_t j = 1; j <= max_j; ++j) {
        const auto chars = characters_mod(j, modulus_cap);
        for (std::uint64_t a = 1; a <= j; ++a) {
            if (std::gcd(a, j) != 1) continue;
            for (std::uint64_t b = 1; b <= j; ++b) {
                ++res.checks;
                std::complex<double> avg = 0.0;
                for (const auto& chi : chars)
                    avg += std::conj(chi(static_cast<std::int64_t>(a))) *
                           chi(static_cast<std::int64_t>(b));
                avg /= static_cast<double>(chars.size());
                const double expected = (a % j) == (b % j) ? 1.0 : 0.0;
                res.max_deviation = std::max(res.max_deviation, std::abs(avg - expected));
            }
        }
    }
    res.pass = res.max_deviation <= 1e-12;
    return res;
}

SuiteResult residue_identity(std::uint64_t j, RowBound r, double tol,
                             std::uint64_t modulus_cap) {
    const auto rep = residue_identity_check(j, r, tol, modulus_cap);
    SuiteResult res{"residue", rep.pass, 1, rep.difference, ""};
    return res;
}

SuiteResult multiplicativity(std::uint64_t max_mn, RowBound r) {
    SuiteResult res{"multiplicativity", true, 0, 0.0, ""};
    for (std::uint64_t m = 2; m * 2 <= max_mn; ++m) {
        const Bigint am = a_r(m, r);
        for (std::uint64_t n = m + 1; m * n <= max_mn; ++n) {
            if (std::gcd(m, n) != 1) continue;
            ++res.checks;
            if (a_r(m * n, r) != am * a_r(n, r)) {
                res.pass = false;
                res.note = "a_r not multiplicative at (" + std::to_string(m) + "," +
                           std::to_string(n) + ")";
                return res;
            }
        }
    }
    return res;
}

SuiteResult dual_path(double s, std::uint64_t j, RowBound r, std::uint64_t N, unsigned M,
                      std::uint32_t prime_cutoff, std::uint64_t modulus_cap) {
    SuiteResult res{"dualpath", true, 0, 0.0, ""};
    for (const auto& chi : characters_mod(j, modulus_cap)) {
        ++res.checks;
        const auto euler = j_r_euler(s, chi, r, M, 1e-8, prime_cutoff);
        const auto series = j_r_series(s, chi, r, N);
        const double diff = std::abs(euler.value - series.value);
        const double combined =
            euler.certified_bound + series.certified_bound + series.heuristic_bound;
        res.max_deviation = std::max(res.max_deviation, diff);
        if (diff > 1e-3 || diff > combined) {
            res.pass = false;
            res.note = "dual-path mismatch at j=" + std::to_string(j);
        }
    }
    return res;
}

} // namespace grouppart::verify
