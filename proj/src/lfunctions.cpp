#include "grouppart/lfunctions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "grouppart/errors.hpp"
#include "grouppart/primes.hpp"
#include "grouppart/sieve.hpp"

namespace grouppart {

namespace {

struct EmResult {
    double value;
    double bound;
};

// Euler-Maclaurin for sum_{k>=0} (k+alpha)^{-s}. Corrections through B_6;
// for the completely monotone f(x) = (x+alpha)^{-s} (real s > 0) the
// remainder is bounded by the first omitted term, here the B_8 one:
//   |R| <= |B_8|/8! * prod_{i=0..6}(s+i) * (N+alpha)^{-s-7}.
EmResult em_hurwitz(double s, double alpha, double tol) {
    const double b8_factor = 1.0 / 1209600.0; // |B_8|/8!
    auto remainder_bound = [&](double edge) {
        double prod = 1.0;
        for (int i = 0; i <= 6; ++i) prod *= s + i;
        return b8_factor * prod * std::pow(edge, -s - 7.0);
    };
    std::size_t n = 16;
    while (remainder_bound(static_cast<double>(n) + alpha) > tol && n < (1u << 22)) n *= 2;
    const double edge = static_cast<double>(n) + alpha;
    const double rem = remainder_bound(edge);
    if (rem > tol) throw ToleranceError("em_hurwitz: tolerance not reachable under term cap");

    double sum = 0.0, comp = 0.0; // Kahan
    for (std::size_t k = 0; k < n; ++k) {
        const double term = std::pow(static_cast<double>(k) + alpha, -s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double v = sum;
    v += std::pow(edge, 1.0 - s) / (s - 1.0);
    v += 0.5 * std::pow(edge, -s);
    const double e1 = std::pow(edge, -s - 1.0);
    const double e3 = std::pow(edge, -s - 3.0);
    const double e5 = std::pow(edge, -s - 5.0);
    v += (1.0 / 12.0) * s * e1;
    v -= (1.0 / 720.0) * s * (s + 1.0) * (s + 2.0) * e3;
    v += (1.0 / 30240.0) * s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * e5;
    const double slop = 4e-16 * (std::abs(v) + sum);
    return {v, rem + slop};
}

} // namespace

TailBoundedValue zeta_value(double s, double tol) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_value: requires s > 1");
    if (!(tol > 0.0)) throw std::invalid_argument("zeta_value: tol must be positive");
    const auto em = em_hurwitz(s, 1.0, tol);
    return {std::complex<double>(em.value, 0.0), em.bound, 0.0};
}

TailBoundedValue hurwitz_zeta(double s, double alpha, double tol) {
    if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: requires s > 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("hurwitz_zeta: requires alpha > 0");
    const auto em = em_hurwitz(s, alpha, tol);
    return {std::complex<double>(em.value, 0.0), em.bound, 0.0};
}

TailBoundedValue l_value(double s, const DirichletCharacter& chi, double tol) {
    if (!(s > 1.0)) throw std::invalid_argument("l_value: requires s > 1");
    const std::uint64_t j = chi.modulus();
    const double js = std::pow(static_cast<double>(j), -s);
    const double per_term_tol = tol / (js * static_cast<double>(chi.group().phi()) * 2.0);
    std::complex<double> sum = 0.0;
    double bound = 0.0;
    for (std::uint64_t a = 1; a <= j; ++a) {
        const auto cv = chi.value_exponent(static_cast<std::int64_t>(a));
        if (!cv) continue;
        const auto em = em_hurwitz(s, static_cast<double>(a) / static_cast<double>(j), per_term_tol);
        const double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(cv->first) /
                             static_cast<double>(cv->second);
        sum += std::complex<double>(std::cos(angle), std::sin(angle)) * em.value;
        bound += em.bound;
    }
    sum *= js;
    bound *= js;
    bound += 8e-16 * std::abs(sum) * static_cast<double>(chi.group().phi());
    return {sum, bound, 0.0};
}

namespace {

std::complex<double> int_pow(std::complex<double> base, unsigned e) {
    std::complex<double> r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// sum_{p} p^{-sigma} <= 2^{-sigma} (1 + 2/(sigma-1)) via integral comparison
double prime_sum_bound(double sigma) {
    return std::pow(2.0, -sigma) * (1.0 + 2.0 / (sigma - 1.0));
}

} // namespace

TailBoundedValue j_r_euler(double s, const DirichletCharacter& chi, RowBound r, unsigned M,
                           double tol, std::uint32_t prime_cutoff) {
    if (!(s > 1.0)) throw std::invalid_argument("j_r_euler: requires s > 1");
    if (M < 2) throw std::invalid_argument("j_r_euler: requires M >= 2");
    if (prime_cutoff < 2) throw std::invalid_argument("j_r_euler: prime cutoff too small");

    double weight_sum = 0.0;
    for (unsigned m = 1; m < M; ++m) weight_sum += r.clamp(m);
    const double tol_each = tol / (4.0 * std::max(1.0, weight_sum));

    std::complex<double> value = 1.0;
    double rel = 0.0; // accumulated relative-error budget
    for (unsigned m = 1; m < M; ++m) {
        const auto lm = l_value(static_cast<double>(m) * s, chi.pow(m), tol_each);
        const double mag = std::abs(lm.value);
        if (!(mag > 10.0 * lm.certified_bound))
            throw ToleranceError("j_r_euler: L-factor too small to certify");
        value *= int_pow(lm.value, r.clamp(m));
        rel += r.clamp(m) * lm.certified_bound / mag;
    }

    // residual Euler factors for m >= M over p <= prime_cutoff
    const auto primes = primes_up_to(prime_cutoff);
    std::complex<double> residual_log = 0.0;
    unsigned m_stop = M;
    for (unsigned m = M;; ++m) {
        const double sigma = static_cast<double>(m) * s;
        const double contrib_bound = 2.0 * r.clamp(m) * prime_sum_bound(sigma);
        if (contrib_bound < 1e-20 || m > M + 4096) {
            m_stop = m;
            break;
        }
        const auto chim = chi.pow(m);
        for (std::uint32_t p : primes) {
            const std::complex<double> z =
                chim(static_cast<std::int64_t>(p)) * std::pow(static_cast<double>(p), -sigma);
            residual_log -= static_cast<double>(r.clamp(m)) * std::log(1.0 - z);
        }
    }
    // omitted m beyond m_stop (all primes)
    double tail_m = 0.0;
    for (unsigned m = m_stop;; ++m) {
        const double t = 2.0 * r.clamp(m) * prime_sum_bound(static_cast<double>(m) * s);
        tail_m += t;
        if (t < 1e-24 * (tail_m + 1e-300) || m > m_stop + 4096) break;
    }
    // omitted primes beyond the cutoff for M <= m < m_stop:
    // sum_{p > P} p^{-sigma} <= P^{1-sigma}/(sigma-1)
    double tail_p = 0.0;
    for (unsigned m = M; m < m_stop; ++m) {
        const double sigma = static_cast<double>(m) * s;
        tail_p += 2.0 * r.clamp(m) * std::pow(static_cast<double>(prime_cutoff), 1.0 - sigma) /
                  (sigma - 1.0);
    }

    value *= std::exp(residual_log);
    const double rel_total = rel + tail_m + tail_p;
    const double bound = std::abs(value) * std::expm1(rel_total) + 1e-15 * std::abs(value);
    return {value, bound, 0.0};
}

TailBoundedValue j_r_series(double s, const DirichletCharacter& chi, RowBound r, std::uint64_t N,
                            double eps) {
    if (!(s > 1.0 + eps))
        throw std::invalid_argument("j_r_series: heuristic tail needs s > 1 + eps");
    if (N < 1) throw std::invalid_argument("j_r_series: N must be >= 1");
    const CountTable table = sieve_a_r(N, r);
    const std::uint64_t j = chi.modulus();
    std::vector<std::complex<double>> chi_of(j ? j : 1);
    for (std::uint64_t a = 0; a < j; ++a) chi_of[a] = chi(static_cast<std::int64_t>(a));

    constexpr std::uint64_t kSumBlock = 4096; // fixed boundaries keep the reduction deterministic
    const std::uint64_t nblocks = (N + kSumBlock - 1) / kSumBlock;
    std::vector<std::complex<double>> partial(nblocks, 0.0);
    std::vector<double> partial_abs(nblocks, 0.0);

#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        const std::uint64_t lo = static_cast<std::uint64_t>(b) * kSumBlock + 1;
        const std::uint64_t hi = std::min(N + 1, lo + kSumBlock);
        std::complex<double> acc = 0.0;
        double acc_abs = 0.0;
        for (std::uint64_t n = lo; n < hi; ++n) {
            const double an = static_cast<double>(table.values[n]);
            const double ns = std::pow(static_cast<double>(n), -s);
            acc += chi_of[n % j] * (an * ns);
            acc_abs += an * ns;
        }
        partial[b] = acc;
        partial_abs[b] = acc_abs;
    }
    std::complex<double> sum = 0.0;
    double sum_abs = 0.0;
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        sum += partial[b];
        sum_abs += partial_abs[b];
    }

    double c_emp = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n)
        c_emp = std::max(c_emp, static_cast<double>(table.values[n]) /
                                    std::pow(static_cast<double>(n), eps));
    const double heuristic =
        c_emp * std::pow(static_cast<double>(N), 1.0 + eps - s) / (s - 1.0 - eps);
    const double certified = 8e-16 * sum_abs;
    return {sum, certified, heuristic};
}

std::string evaluation_json(double s, std::uint64_t modulus, std::size_t character_index,
                            RowBound r, const TailBoundedValue& v) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\"s\":%.17g,\"modulus\":%llu,\"character_index\":%zu,\"r\":\"%s\","
                  "\"value_re\":%.17g,\"value_im\":%.17g,\"certified_bound\":%.17g,"
                  "\"heuristic_bound\":%.17g}",
                  s, static_cast<unsigned long long>(modulus), character_index,
                  to_string(r).c_str(), v.value.real(), v.value.imag(), v.certified_bound,
                  v.heuristic_bound);
    return buf;
}

} // namespace grouppart
