#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "grouppart/asymptotics.hpp"
#include "grouppart/group_partition.hpp"
#include "grouppart/verify.hpp"

using namespace grouppart;

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
    // unit-count oracle
    for (std::uint64_t j = 1; j <= 500; ++j) {
        std::uint64_t units = 0;
        for (std::uint64_t n = 1; n <= j; ++n)
            if (std::gcd(n, j) == 1) ++units;
        CHECK(euler_phi(j) == units);
    }
    // multiplicative on coprime pairs
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
        {4, 9}, {8, 125}, {49, 64}, {3, 1024}, {25, 81}, {7, 1000}};
    for (const auto& [m, n] : pairs) CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
}

TEST_CASE("c_r_constant golden and structure") {
    const auto c11 = c_r_constant(1, RowBound(1), 1e-9);
    CHECK(c11.c_value == doctest::Approx(2.2948565916733138).epsilon(1e-6));
    CHECK(c11.certified_bound <= 1e-9);
    CHECK(c11.slope == c11.c_value); // phi(1) = 1

    // min(m, 2) = 2 for every m >= 2, so c_2(1) is the square of c_1(1)
    const auto c21 = c_r_constant(1, RowBound(2), 1e-10);
    CHECK(c21.c_value == doctest::Approx(c11.c_value * c11.c_value).epsilon(1e-7));

    double prev = 0.0;
    for (const RowBound r : {RowBound(1), RowBound(2), RowBound(3), RowBound::inf()}) {
        const auto c = c_r_constant(1, r, 1e-9);
        CHECK(c.c_value > prev);
        prev = c.c_value;
    }

    // refining the tolerance moves the value by less than the old certificate
    const auto coarse = c_r_constant(4, RowBound(2), 1e-6);
    const auto fine = c_r_constant(4, RowBound(2), 1e-12);
    CHECK(std::abs(coarse.c_value - fine.c_value) <= coarse.certified_bound);

    // cross-check the p | j factor against an independent truncation
    double jfactor = 1.0;
    for (unsigned m = 1; m <= 400; ++m)
        jfactor *= std::pow(1.0 - std::pow(2.0, -static_cast<double>(m)),
                            static_cast<double>(std::min(m, 2u)));
    const auto c24 = c_r_constant(4, RowBound(2), 1e-12);
    CHECK(c24.c_value == doctest::Approx(c21.c_value * jfactor).epsilon(1e-9));
    CHECK(c24.slope == doctest::Approx(c24.c_value / 2.0)); // phi(4) = 2

    const auto json = c24.to_json();
    CHECK(json.find("\"j\":4") != std::string::npos);
    CHECK(json.find("\"r\":\"2\"") != std::string::npos);
    CHECK(json.find("certified_bound") != std::string::npos);
}

TEST_CASE("residue identity dual paths") {
    for (std::uint64_t j : {1ull, 4ull, 12ull}) {
        const auto rep = residue_identity_check(j, RowBound(2), 1e-8);
        CHECK(rep.pass);
        CHECK(rep.difference <= 1e-8);
    }
    const auto inf_rep = residue_identity_check(12, RowBound::inf(), 1e-8);
    CHECK(inf_rep.pass);
    const auto suite = verify::residue_identity(4, RowBound(1), 1e-8);
    CHECK(suite.pass);
}

TEST_CASE("progression_partial_sum goldens") {
    const auto t = sieve_a_r(100, RowBound(1));
    CHECK(progression_partial_sum(t, 10, 1, 1) == 14);
    CHECK(progression_partial_sum(t, 1, 1, 1) == 1);
    CHECK(progression_partial_sum(t, 1, 4, 1) == 1);
    CHECK(progression_partial_sum(t, 1, 4, 3) == 0); // only n = 1, not in class 3
    CHECK(progression_partial_sum(t, 16, 4, 1) == 5); // a(1)+a(5)+a(9)+a(13)
    CHECK_THROWS_AS(progression_partial_sum(t, 10, 4, 2), std::invalid_argument);
    CHECK(progression_partial_sum(16, 4, 1, RowBound(1)) == 5);
}

TEST_CASE("slope additivity is an exact integer identity") {
    const auto t = sieve_a_r(2000, RowBound(2));
    Bigint by_classes = 0;
    for (std::uint64_t k : {1ull, 3ull}) by_classes += progression_partial_sum(t, 2000, 4, k);
    Bigint direct = 0;
    for (std::uint64_t n = 1; n <= 2000; ++n)
        if (std::gcd(n, 4ull) == 1) direct += t.at(n);
    CHECK(by_classes == direct);
}

TEST_CASE("convergence_report structure") {
    const auto rep = convergence_report({100, 1000, 10000}, 1, 1, RowBound(1));
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].x == 100);
    CHECK(rep.rows[2].x == 10000);
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i)
        CHECK(rep.rows[i].partial_sum < rep.rows[i + 1].partial_sum);
    CHECK(rep.slope == doctest::Approx(2.2948565916733138).epsilon(1e-6));
    for (const auto& row : rep.rows) {
        CHECK(row.ratio > 0.0);
        CHECK(std::isfinite(row.rel_dev));
    }

    std::ostringstream csv;
    rep.write_csv(csv);
    CHECK(csv.str().rfind("x,S,ratio,slope,rel_dev\n", 0) == 0);
    std::ostringstream js;
    rep.write_json(js);
    CHECK(js.str().find("\"mode\":\"a_r\"") != std::string::npos);

    CHECK_THROWS_AS(convergence_report({100, 100}, 1, 1, RowBound(1)), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({}, 1, 1, RowBound(1)), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({100}, 4, 2, RowBound(1)), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report({100}, 1, 1, RowBound::inf(), DensityMode::b_r),
                    std::invalid_argument);
}

TEST_CASE("b_r mode subtracts only the n = 1 contribution when r = 1") {
    const auto a_rep = convergence_report({10, 100}, 1, 1, RowBound(1), DensityMode::a_r);
    const auto b_rep = convergence_report({10, 100}, 1, 1, RowBound(1), DensityMode::b_r);
    REQUIRE(a_rep.rows.size() == b_rep.rows.size());
    for (std::size_t i = 0; i < a_rep.rows.size(); ++i)
        CHECK(a_rep.rows[i].partial_sum - 1 == b_rep.rows[i].partial_sum);
    CHECK(a_rep.slope == doctest::Approx(b_rep.slope));
}

TEST_CASE("b_r mode slope uses the constant difference") {
    const auto rep = convergence_report({100}, 1, 1, RowBound(2), DensityMode::b_r);
    const double c2 = c_r_constant(1, RowBound(2), 1e-10).c_value;
    const double c1 = c_r_constant(1, RowBound(1), 1e-10).c_value;
    CHECK(rep.slope == doctest::Approx(c2 - c1).epsilon(1e-9));
}

TEST_CASE("multiplicativity suite") {
    const auto suite = verify::multiplicativity(1000, RowBound(2));
    CHECK(suite.pass);
    CHECK(suite.checks > 100);
}
