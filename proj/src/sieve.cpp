#include "grouppart/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouppart/errors.hpp"
#include "grouppart/plane_partitions.hpp"
#include "grouppart/primes.hpp"

namespace grouppart {

namespace {

constexpr std::uint64_t kBlock = 1u << 16; // fixed: block layout must not depend on threads

// PL_r(e) for e <= 63, the largest exponent of a prime power below 2^64.
std::vector<std::uint64_t> pl_table(RowBound r) {
    const auto series = plane_partition_counts(63, r);
    std::vector<std::uint64_t> t(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) t[i] = series[i].convert_to<std::uint64_t>();
    return t;
}

void check_budget(std::uint64_t x, std::uint64_t budget) {
    if (x < 1) throw std::invalid_argument("sieve: x must be >= 1");
    if (x > budget)
        throw ResourceLimitError("sieve: x = " + std::to_string(x) + " exceeds budget " +
                                 std::to_string(budget));
}

} // namespace

CountTable sieve_a_r(std::uint64_t x, RowBound r, std::uint64_t budget) {
    check_budget(x, budget);
    const auto pl = pl_table(r);
    CountTable table{r, x, "a_r", std::vector<std::uint64_t>(x + 1, 0)};
    const auto primes = primes_up_to(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(x)) + 1.5));
    const std::int64_t nblocks = static_cast<std::int64_t>((x + kBlock - 1) / kBlock);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock + 1;
        const std::uint64_t hi = std::min(x + 1, lo + kBlock);
        std::vector<std::uint64_t> residual(hi - lo);
        std::vector<std::uint64_t> acc(hi - lo, 1);
        for (std::uint64_t n = lo; n < hi; ++n) residual[n - lo] = n;
        for (std::uint32_t p : primes) {
            if (static_cast<std::uint64_t>(p) * p > hi - 1) break;
            std::uint64_t m = ((lo + p - 1) / p) * p;
            for (; m < hi; m += p) {
                std::uint64_t& res = residual[m - lo];
                unsigned e = 0;
                while (res % p == 0) {
                    res /= p;
                    ++e;
                }
                if (e) acc[m - lo] *= pl[e];
            }
        }
        // leftover residual > 1 is a prime above sqrt(x); PL_r(1) = 1.
        for (std::uint64_t n = lo; n < hi; ++n) table.values[n] = acc[n - lo];
    }
    table.values[1] = 1;
    return table;
}

CountTable sieve_a_r_serial(std::uint64_t x, RowBound r, std::uint64_t budget) {
    check_budget(x, budget);
    if (x > 0xFFFFFFFEull)
        throw ResourceLimitError("sieve_a_r_serial: 32-bit factor tables cap x below 2^32");
    const auto pl = pl_table(r);
    CountTable table{r, x, "a_r", std::vector<std::uint64_t>(x + 1, 0)};
    std::vector<std::uint32_t> spf(x + 1, 0);
    std::vector<std::uint32_t> rest(x + 1, 0);
    std::vector<std::uint8_t> exp(x + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || i * p > x) break;
            spf[i * p] = p;
        }
    }
    table.values[1] = 1;
    rest[1] = 1;
    for (std::uint64_t n = 2; n <= x; ++n) {
        const std::uint32_t p = spf[n];
        const std::uint64_t m = n / p;
        if (spf[m] == p) {
            exp[n] = static_cast<std::uint8_t>(exp[m] + 1);
            rest[n] = rest[m];
        } else {
            exp[n] = 1;
            rest[n] = static_cast<std::uint32_t>(m);
        }
        table.values[n] = table.values[rest[n]] * pl[exp[n]];
    }
    return table;
}

CountTable sieve_b_r(std::uint64_t x, unsigned r, std::uint64_t budget) {
    if (r == 0) throw std::invalid_argument("sieve_b_r: r must be >= 1");
    CountTable hi = sieve_a_r(x, RowBound(r), budget);
    hi.value_label = "b_r";
    if (r == 1) {
        hi.values[1] -= 1; // a_0(n) = [n == 1]
        return hi;
    }
    const CountTable lo = sieve_a_r(x, RowBound(r - 1), budget);
    for (std::uint64_t n = 1; n <= x; ++n) hi.values[n] -= lo.values[n];
    return hi;
}

} // namespace grouppart
