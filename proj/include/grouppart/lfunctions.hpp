#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "grouppart/dirichlet.hpp"
#include "grouppart/rowbound.hpp"

namespace grouppart {

// Numeric result carrying an absolute-error certificate. certified_bound
// covers every truncation and rounding allowance made along the way;
// heuristic_bound is the separately-flagged empirical series tail (zero for
// fully certified evaluations).
struct TailBoundedValue {
    std::complex<double> value;
    double certified_bound = 0.0;
    double heuristic_bound = 0.0;
};

// zeta(s) for s > 1: Euler-Maclaurin partial sum with the integral term
// N^{1-s}/(s-1) and Bernoulli corrections; the remainder bound is the first
// omitted Bernoulli term, valid since x^{-s} is completely monotone.
TailBoundedValue zeta_value(double s, double tol);

// Hurwitz zeta(s, alpha) on the same Euler-Maclaurin core (exposed for tests).
TailBoundedValue hurwitz_zeta(double s, double alpha, double tol);

// L(s, chi) = j^{-s} sum_{a unit mod j} chi(a) zeta(s, a/j), s > 1.
TailBoundedValue l_value(double s, const DirichletCharacter& chi, double tol);

// Euler-product evaluation of J_r(s, chi): the L-factor product for m < M
// times the residual Euler factors for m >= M over primes <= prime_cutoff,
// with certified bounds for everything omitted.
TailBoundedValue j_r_euler(double s, const DirichletCharacter& chi, RowBound r, unsigned M,
                           double tol, std::uint32_t prime_cutoff = 1000);

// Direct Dirichlet partial sum sum_{n<=N} chi(n) a_r(n) n^{-s} via the sieve.
// The tail bound C nu^{1+eps-s}/(s-1-eps) with empirically calibrated
// C = max_{n<=N} a_r(n)/n^eps is recorded as heuristic, not certified.
TailBoundedValue j_r_series(double s, const DirichletCharacter& chi, RowBound r, std::uint64_t N,
                            double eps = 0.25);

// JSON export of one evaluation, schema:
// {s, modulus, character_index, r, value_re, value_im, certified_bound, heuristic_bound}
std::string evaluation_json(double s, std::uint64_t modulus, std::size_t character_index,
                            RowBound r, const TailBoundedValue& v);

} // namespace grouppart
