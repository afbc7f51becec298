#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "grouppart/bigint.hpp"
#include "grouppart/count_table.hpp"
#include "grouppart/rowbound.hpp"
#include "grouppart/sieve.hpp"

namespace grouppart {

std::uint64_t euler_phi(std::uint64_t j);

// c_r(j) = prod_{m>=1} prod_{p|j} (1-p^-m)^{min(m,r)} * prod_{m>=2} zeta(m)^{min(m,r)}
struct DensityConstant {
    std::uint64_t j;
    RowBound r = RowBound::inf();
    double c_value = 0.0;
    double certified_bound = 0.0;
    double slope = 0.0; // c_value / phi(j)

    std::string to_json() const;
};

DensityConstant c_r_constant(std::uint64_t j, RowBound r, double tol);

// Residue of J_r(s, chi_0) at s = 1 two ways: prod_{p|j}(1-1/p) *
// prod_{m>=2} L(m, chi_0)^{min(m,r)} against the direct c_r(j) product.
struct ResidueIdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_bound = 0.0;
    double rhs_bound = 0.0;
    double difference = 0.0;
    double tol = 0.0;
    bool pass = false;
};

ResidueIdentityReport residue_identity_check(std::uint64_t j, RowBound r, double tol,
                                             std::uint64_t modulus_cap = 10'000);

// Exact sum of table values over n <= x, n = k (mod j); requires gcd(j,k) = 1.
Bigint progression_partial_sum(const CountTable& table, std::uint64_t x, std::uint64_t j,
                               std::uint64_t k);
Bigint progression_partial_sum(std::uint64_t x, std::uint64_t j, std::uint64_t k, RowBound r,
                               std::uint64_t budget = kDefaultSieveCap);

enum class DensityMode { a_r, b_r };

struct ConvergenceReport {
    std::uint64_t j = 1;
    std::uint64_t k = 1;
    RowBound r = RowBound::inf();
    DensityMode mode = DensityMode::a_r;
    double slope = 0.0;

    struct Row {
        std::uint64_t x;
        Bigint partial_sum;
        double ratio;   // partial_sum / x
        double rel_dev; // |ratio - slope| / slope
    };
    std::vector<Row> rows;

    void write_csv(std::ostream& os) const; // header "x,S,ratio,slope,rel_dev"
    void write_json(std::ostream& os) const;
};

// Empirical check of the density prediction at the given checkpoints
// (strictly increasing). b_r mode uses slope (c_r(j) - c_{r-1}(j))/phi(j),
// with c_0(j) := 0 since J_0 has no pole at s = 1.
ConvergenceReport convergence_report(const std::vector<std::uint64_t>& checkpoints,
                                     std::uint64_t j, std::uint64_t k, RowBound r,
                                     DensityMode mode = DensityMode::a_r, double tol = 1e-10,
                                     std::uint64_t budget = kDefaultSieveCap);

} // namespace grouppart
