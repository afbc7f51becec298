#include "grouppart/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "grouppart/dirichlet.hpp"
#include "grouppart/errors.hpp"
#include "grouppart/lfunctions.hpp"
#include "grouppart/primes.hpp"

namespace grouppart {

std::uint64_t euler_phi(std::uint64_t j) {
    if (j == 0) throw std::invalid_argument("euler_phi: j must be >= 1");
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(j)) {
        std::uint64_t pk = 1;
        for (unsigned i = 0; i + 1 < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

namespace {

// sum_{m > M} m x^m = x^{M+1} ((M+1)(1-x) + x) / (1-x)^2
double geometric_tail(double x, unsigned M) {
    const double q = 1.0 - x;
    return std::pow(x, M + 1) * ((M + 1) * q + x) / (q * q);
}

// Tail of the log-product beyond M. Inequalities used:
//   log zeta(m) <= zeta(m) - 1 <= 2^-m + 3^-m + int_3^oo x^-m dx
//                <= 2^-m + 4 * 3^-m                       (m >= 2),
//   |log(1 - p^-m)| <= p^-m / (1 - p^-m) <= 2 p^-m,
// and min(m, r) <= m throughout.
double log_tail_bound(unsigned M, const std::vector<std::uint64_t>& j_primes) {
    double tail = geometric_tail(0.5, M) + 4.0 * geometric_tail(1.0 / 3.0, M);
    for (std::uint64_t p : j_primes) tail += 2.0 * geometric_tail(1.0 / static_cast<double>(p), M);
    return tail;
}

} // namespace

DensityConstant c_r_constant(std::uint64_t j, RowBound r, double tol) {
    if (j == 0) throw std::invalid_argument("c_r_constant: j must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("c_r_constant: tol must be positive");
    std::vector<std::uint64_t> j_primes;
    for (const auto& [p, e] : factorize(j)) j_primes.push_back(p);

    unsigned M = 16;
    while (log_tail_bound(M, j_primes) > tol / 4.0 && M < (1u << 15)) M *= 2;

    const double ztol = 1e-15;
    double value = 1.0;
    double rel = 0.0;
    for (unsigned m = 2; m <= M; ++m) {
        const auto z = zeta_value(static_cast<double>(m), ztol);
        const double zm = z.value.real();
        value *= std::pow(zm, static_cast<double>(r.clamp(m)));
        rel += r.clamp(m) * z.certified_bound / zm;
    }
    for (unsigned m = 1; m <= M; ++m)
        for (std::uint64_t p : j_primes)
            value *= std::pow(1.0 - std::pow(static_cast<double>(p), -static_cast<double>(m)),
                              static_cast<double>(r.clamp(m)));

    const double tail = log_tail_bound(M, j_primes);
    const double bound = value * std::expm1(tail + rel) + 1e-14 * value;
    DensityConstant out;
    out.j = j;
    out.r = r;
    out.c_value = value;
    out.certified_bound = bound;
    out.slope = value / static_cast<double>(euler_phi(j));
    return out;
}

std::string DensityConstant::to_json() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"j\":%llu,\"r\":\"%s\",\"c_value\":%.17g,\"certified_bound\":%.17g,"
                  "\"slope\":%.17g}",
                  static_cast<unsigned long long>(j), to_string(r).c_str(), c_value,
                  certified_bound, slope);
    return buf;
}

ResidueIdentityReport residue_identity_check(std::uint64_t j, RowBound r, double tol,
                                             std::uint64_t modulus_cap) {
    std::vector<std::uint64_t> j_primes;
    for (const auto& [p, e] : factorize(j)) j_primes.push_back(p);

    unsigned M = 16;
    while (log_tail_bound(M, j_primes) > tol / 8.0 && M < (1u << 15)) M *= 2;

    const auto chars = characters_mod(j, modulus_cap);
    const auto& chi0 = chars.front();
    double lhs = 1.0;
    double lhs_rel = 0.0;
    for (std::uint64_t p : j_primes) lhs *= 1.0 - 1.0 / static_cast<double>(p);
    for (unsigned m = 2; m <= M; ++m) {
        const auto lm = l_value(static_cast<double>(m), chi0, 1e-15);
        const double lv = lm.value.real();
        lhs *= std::pow(lv, static_cast<double>(r.clamp(m)));
        lhs_rel += r.clamp(m) * lm.certified_bound / lv;
    }
    // tail of the L-product: |log L(m, chi0)| <= (zeta(m)-1) + sum_{p|j} 2 p^-m
    const double lhs_tail = log_tail_bound(M, j_primes);
    const double lhs_bound = lhs * std::expm1(lhs_tail + lhs_rel) + 1e-14 * lhs;

    const auto rhs = c_r_constant(j, r, tol / 8.0);

    ResidueIdentityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs.c_value;
    rep.lhs_bound = lhs_bound;
    rep.rhs_bound = rhs.certified_bound;
    rep.difference = std::abs(lhs - rhs.c_value);
    rep.tol = tol;
    rep.pass = rep.difference <= tol;
    return rep;
}

Bigint progression_partial_sum(const CountTable& table, std::uint64_t x, std::uint64_t j,
                               std::uint64_t k) {
    if (j == 0) throw std::invalid_argument("progression_partial_sum: j must be >= 1");
    if (std::gcd(j, k) != 1)
        throw std::invalid_argument("progression_partial_sum: requires gcd(j, k) = 1");
    if (x > table.x_max) throw std::invalid_argument("progression_partial_sum: x beyond table");
    const std::uint64_t k0 = k % j;
    Bigint total = 0;
    std::uint64_t block_acc = 0;
    std::uint64_t in_block = 0;
    std::uint64_t first = k0 == 0 ? j : k0;
    for (std::uint64_t n = first; n <= x; n += j) {
        block_acc += table.values[n];
        if (++in_block == (1u << 16)) { // bounded so the u64 accumulator cannot wrap
            total += block_acc;
            block_acc = 0;
            in_block = 0;
        }
    }
    total += block_acc;
    return total;
}

Bigint progression_partial_sum(std::uint64_t x, std::uint64_t j, std::uint64_t k, RowBound r,
                               std::uint64_t budget) {
    return progression_partial_sum(sieve_a_r(x, r, budget), x, j, k);
}

void ConvergenceReport::write_csv(std::ostream& os) const {
    os << "x,S,ratio,slope,rel_dev\n";
    char buf[128];
    for (const auto& row : rows) {
        os << row.x << ',' << row.partial_sum << ',';
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g", row.ratio, slope, row.rel_dev);
        os << buf << '\n';
    }
}

void ConvergenceReport::write_json(std::ostream& os) const {
    char buf[128];
    os << "{\"j\":" << j << ",\"k\":" << k << ",\"r\":\"" << to_string(r) << "\",\"mode\":\""
       << (mode == DensityMode::a_r ? "a_r" : "b_r") << "\",";
    std::snprintf(buf, sizeof(buf), "\"slope\":%.17g", slope);
    os << buf << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << "\n{\"x\":" << rows[i].x << ",\"S\":\"" << rows[i].partial_sum << "\",";
        std::snprintf(buf, sizeof(buf), "\"ratio\":%.17g,\"rel_dev\":%.17g}", rows[i].ratio,
                      rows[i].rel_dev);
        os << buf;
    }
    os << "\n]}\n";
}

ConvergenceReport convergence_report(const std::vector<std::uint64_t>& checkpoints,
                                     std::uint64_t j, std::uint64_t k, RowBound r,
                                     DensityMode mode, double tol, std::uint64_t budget) {
    if (checkpoints.empty()) throw std::invalid_argument("convergence_report: no checkpoints");
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i)
        if (checkpoints[i] >= checkpoints[i + 1])
            throw std::invalid_argument("convergence_report: checkpoints must increase strictly");
    if (std::gcd(j, k) != 1)
        throw std::invalid_argument("convergence_report: requires gcd(j, k) = 1");
    if (mode == DensityMode::b_r && r.unbounded())
        throw std::invalid_argument("convergence_report: b_r mode needs finite r");

    const std::uint64_t x_max = checkpoints.back();
    const CountTable table = mode == DensityMode::a_r ? sieve_a_r(x_max, r, budget)
                                                      : sieve_b_r(x_max, r.value(), budget);

    ConvergenceReport rep;
    rep.j = j;
    rep.k = k;
    rep.r = r;
    rep.mode = mode;
    if (mode == DensityMode::a_r) {
        rep.slope = c_r_constant(j, r, tol).slope;
    } else {
        const double hi = c_r_constant(j, r, tol).c_value;
        const double lo = r.value() == 1 ? 0.0 : c_r_constant(j, RowBound(r.value() - 1), tol).c_value;
        rep.slope = (hi - lo) / static_cast<double>(euler_phi(j));
    }

    const std::uint64_t k0 = k % j;
    Bigint running = 0;
    std::uint64_t block_acc = 0;
    std::uint64_t in_block = 0;
    std::size_t ci = 0;
    for (std::uint64_t n = 1; n <= x_max && ci < checkpoints.size(); ++n) {
        if (n % j == k0) {
            block_acc += table.values[n];
            if (++in_block == (1u << 16)) {
                running += block_acc;
                block_acc = 0;
                in_block = 0;
            }
        }
        if (n == checkpoints[ci]) {
            running += block_acc;
            block_acc = 0;
            in_block = 0;
            const double ratio = running.convert_to<double>() / static_cast<double>(n);
            rep.rows.push_back({n, running, ratio, std::abs(ratio - rep.slope) / rep.slope});
            ++ci;
        }
    }
    return rep;
}

} // namespace grouppart
