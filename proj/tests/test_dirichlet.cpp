#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <vector>

#include "grouppart/asymptotics.hpp"
#include "grouppart/dirichlet.hpp"
#include "grouppart/errors.hpp"
#include "grouppart/lfunctions.hpp"
#include "grouppart/primes.hpp"
#include "grouppart/verify.hpp"

using namespace grouppart;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("characters mod 1, 4, 5") {
    const auto c1 = characters_mod(1);
    REQUIRE(c1.size() == 1);
    for (std::int64_t n = 1; n <= 10; ++n) CHECK(c1[0](n) == std::complex<double>(1.0, 0.0));

    const auto c4 = characters_mod(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_principal());
    CHECK(c4[0](3) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(c4[1](3) - std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(c4[0](2) == std::complex<double>(0.0, 0.0));
    CHECK(c4[1](2) == std::complex<double>(0.0, 0.0));

    const auto c5 = characters_mod(5);
    REQUIRE(c5.size() == 4);
    std::set<std::pair<std::uint64_t, std::uint64_t>> values_at_2;
    for (const auto& chi : c5) values_at_2.insert(*chi.value_exponent(2));
    CHECK(values_at_2.size() == 4); // 2 generates the units mod 5
    bool has_order4 = false;
    for (const auto& chi : c5)
        if (std::abs(chi(2) - std::complex<double>(0.0, 1.0)) < 1e-15 ||
            std::abs(chi(2) - std::complex<double>(0.0, -1.0)) < 1e-15)
            has_order4 = true;
    CHECK(has_order4);
}

TEST_CASE("character count and distinctness for j <= 200") {
    for (std::uint64_t j = 1; j <= 200; ++j) {
        const auto chars = characters_mod(j);
        CHECK(chars.size() == euler_phi(j));
        std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> value_vectors;
        for (const auto& chi : chars) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> vec;
            for (std::uint64_t n = 0; n < j; ++n) {
                const auto v = chi.value_exponent(static_cast<std::int64_t>(n));
                if (v) vec.push_back(*v);
            }
            value_vectors.insert(vec);
        }
        CHECK(value_vectors.size() == chars.size());
    }
}

TEST_CASE("characters are completely multiplicative and j-periodic") {
    for (std::uint64_t j : {4ull, 5ull, 8ull, 12ull, 45ull}) {
        for (const auto& chi : characters_mod(j)) {
            for (std::int64_t m = 1; m <= 30; ++m) {
                CHECK(std::abs(chi(m + static_cast<std::int64_t>(j)) - chi(m)) < 1e-14);
                for (std::int64_t n = 1; n <= 30; ++n)
                    CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-13);
            }
        }
    }
}

TEST_CASE("char_pow") {
    const auto c5 = characters_mod(5);
    for (const auto& chi : c5) {
        CHECK(chi.pow(0).is_principal());
        if (chi.value_exponent(2)->first % 2 == 1) { // chi(2) of exact order 4
            const auto sq = chi.pow(2);
            CHECK(std::abs(sq(2) - std::complex<double>(-1.0, 0.0)) < 1e-14);
        }
    }
    for (const auto& chi : characters_mod(12)) {
        for (std::uint64_t m = 0; m <= 6; ++m) {
            const auto chim = char_pow(chi, m);
            for (std::int64_t n = 1; n <= 50; ++n) {
                if (std::gcd<std::int64_t>(n, 12) != 1) {
                    CHECK(chim(n) == std::complex<double>(0.0));
                    continue;
                }
                std::complex<double> direct = 1.0;
                for (std::uint64_t i = 0; i < m; ++i) direct *= chi(n);
                CHECK(std::abs(chim(n) - direct) < 1e-12);
            }
        }
    }
}

TEST_CASE("orthogonality") {
    CHECK(std::abs(orthogonality_average(4, 1, 1) - 1.0) < 1e-14);
    CHECK(std::abs(orthogonality_average(4, 1, 3)) < 1e-14);
    for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(std::abs(orthogonality_average(1, 1, n) - 1.0) < 1e-14);
    CHECK_THROWS_AS(orthogonality_average(4, 2, 1), std::invalid_argument);

    const auto suite = verify::orthogonality(30);
    CHECK(suite.pass);
    CHECK(suite.max_deviation <= 1e-12);
}

TEST_CASE("zeta_value") {
    const auto z2 = zeta_value(2.0, 1e-12);
    CHECK(std::abs(z2.value.real() - kPi * kPi / 6.0) <= z2.certified_bound + 1e-14);
    CHECK(z2.certified_bound <= 1e-12);

    // independent oracle: direct partial sum with midpoint tail
    double s3 = 0.0;
    const double N = 20000.0;
    for (double n = 1; n <= N; ++n) s3 += 1.0 / (n * n * n);
    s3 += 1.0 / (2.0 * (N + 0.5) * (N + 0.5));
    const auto z3 = zeta_value(3.0, 1e-10);
    CHECK(std::abs(z3.value.real() - s3) < 1e-7);

    const auto z20 = zeta_value(20.0, 1e-14);
    CHECK(z20.value.real() - 1.0 < 2.0 * std::pow(2.0, -20.0));
    CHECK(z20.value.real() > 1.0);

    CHECK_THROWS_AS(zeta_value(1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(zeta_value(0.5, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(zeta_value(1.5, 1e-60), ToleranceError); // below the term cap's reach

    // feasible even close to s = 1
    const auto znear = zeta_value(1.001, 1e-9);
    CHECK(znear.certified_bound <= 1e-9);
    CHECK(znear.value.real() > 999.0); // pole dominance: zeta(1+eps) ~ 1/eps
}

TEST_CASE("hurwitz_zeta") {
    const auto h1 = hurwitz_zeta(2.0, 1.0, 1e-12);
    CHECK(std::abs(h1.value.real() - kPi * kPi / 6.0) < 1e-11);
    const auto h2 = hurwitz_zeta(2.0, 0.5, 1e-12);
    CHECK(std::abs(h2.value.real() - kPi * kPi / 2.0) < 1e-11);
}

TEST_CASE("l_value golden points") {
    const auto c1 = characters_mod(1);
    const auto l1 = l_value(2.0, c1[0], 1e-12);
    CHECK(std::abs(l1.value.real() - kPi * kPi / 6.0) < 1e-11);

    const auto c4 = characters_mod(4);
    const auto l0 = l_value(2.0, c4[0], 1e-12);
    CHECK(std::abs(l0.value.real() - kPi * kPi / 8.0) < 1e-11);

    // non-principal character mod 4 at s = 2: alternating odd series oracle
    double catalan = 0.0;
    for (int k = 0; k < 4000; ++k)
        catalan += (k % 2 == 0 ? 1.0 : -1.0) / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    const auto lneg = l_value(2.0, c4[1], 1e-10);
    CHECK(std::abs(lneg.value.real() - catalan) < 1e-6);
    CHECK(std::abs(lneg.value.imag()) < 1e-12);
}

TEST_CASE("principal character factorization") {
    for (std::uint64_t j : {1ull, 3ull, 4ull, 5ull, 12ull}) {
        const auto chi0 = characters_mod(j)[0];
        for (double s : {1.5, 2.0, 3.0}) {
            const auto l = l_value(s, chi0, 1e-11);
            auto z = zeta_value(s, 1e-12);
            double expected = z.value.real();
            for (const auto& [p, e] : factorize(j))
                expected *= 1.0 - std::pow(static_cast<double>(p), -s);
            CHECK(std::abs(l.value.real() - expected) <=
                  l.certified_bound + z.certified_bound + 1e-13);
        }
    }
}

TEST_CASE("j_r_series basics") {
    const auto chi = characters_mod(3)[1];
    const auto one = j_r_series(2.0, chi, RowBound(2), 1);
    CHECK(one.value == std::complex<double>(1.0, 0.0)); // a_r(1) = 1

    // partial sums monotone in N for the principal character
    const auto chi0 = characters_mod(4)[0];
    double prev = 0.0;
    for (std::uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
        const auto v = j_r_series(2.0, chi0, RowBound::inf(), n);
        CHECK(v.value.real() > prev);
        prev = v.value.real();
    }
    CHECK_THROWS_AS(j_r_series(1.2, chi0, RowBound(1), 100), std::invalid_argument);
}

TEST_CASE("j_r_series deterministic under threading") {
#ifdef _OPENMP
    const auto chi = characters_mod(5)[1];
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto v1 = j_r_series(2.0, chi, RowBound(2), 50000);
    omp_set_num_threads(4);
    const auto v4 = j_r_series(2.0, chi, RowBound(2), 50000);
    omp_set_num_threads(saved);
    CHECK(v1.value.real() == v4.value.real());
    CHECK(v1.value.imag() == v4.value.imag());
#endif
}

TEST_CASE("j_r_euler against the series") {
    const auto c1 = characters_mod(1);
    const auto euler = j_r_euler(2.0, c1[0], RowBound(1), 40, 1e-8);
    const auto series = j_r_series(2.0, c1[0], RowBound(1), 100000);
    CHECK(std::abs(euler.value - series.value) < 1e-3);
    CHECK(std::abs(euler.value - series.value) <=
          euler.certified_bound + series.certified_bound + series.heuristic_bound);
    CHECK(euler.value.imag() == 0.0);
    CHECK(euler.value.real() > 0.0);

    const auto einf = j_r_euler(2.0, c1[0], RowBound::inf(), 40, 1e-8);
    const auto sinf = j_r_series(2.0, c1[0], RowBound::inf(), 100000);
    CHECK(std::abs(einf.value - sinf.value) < 1e-3);
}

TEST_CASE("j_r_euler certificate shrinks with M and prime cutoff") {
    // near s = 1 the truncation tails dominate the certificate, which is
    // where growing M and the prime cutoff must visibly tighten it
    const auto chi0 = characters_mod(3)[0];
    const double s = 1.01;
    const auto loose = j_r_euler(s, chi0, RowBound(2), 3, 1e-3, 20);
    const auto mid = j_r_euler(s, chi0, RowBound(2), 4, 1e-3, 50);
    const auto tight = j_r_euler(s, chi0, RowBound(2), 5, 1e-3, 100);
    CHECK(loose.certified_bound > mid.certified_bound);
    CHECK(mid.certified_bound > tight.certified_bound);
    CHECK(std::abs(loose.value - tight.value) <= loose.certified_bound + tight.certified_bound);
    // at s = 2 the truncation part is immaterial and the bound stays tiny
    const auto s2 = j_r_euler(2.0, chi0, RowBound(2), 40, 1e-8, 1000);
    CHECK(s2.certified_bound < 1e-10);
}

TEST_CASE("evaluation json schema") {
    const TailBoundedValue v{{1.5, -0.25}, 1e-9, 2e-4};
    const auto s = evaluation_json(2.0, 4, 1, RowBound(2), v);
    CHECK(s.find("\"s\":2") != std::string::npos);
    CHECK(s.find("\"modulus\":4") != std::string::npos);
    CHECK(s.find("\"character_index\":1") != std::string::npos);
    CHECK(s.find("\"r\":\"2\"") != std::string::npos);
    CHECK(s.find("\"value_re\":1.5") != std::string::npos);
    CHECK(s.find("\"value_im\":-0.25") != std::string::npos);
    CHECK(s.find("certified_bound") != std::string::npos);
    CHECK(s.find("heuristic_bound") != std::string::npos);
}

TEST_CASE("modulus cap") {
    CHECK_THROWS_AS(characters_mod(20001), ResourceLimitError);
    CHECK_NOTHROW(characters_mod(97, 100));
    CHECK_THROWS_AS(characters_mod(101, 100), ResourceLimitError);
}
