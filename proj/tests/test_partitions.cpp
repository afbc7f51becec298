#include <doctest.h>

#include "grouppart/errors.hpp"
#include "grouppart/partitions.hpp"
#include "grouppart/plane_partitions.hpp"

using namespace grouppart;

TEST_CASE("partition_count basics") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(1) == 1);
    CHECK(partition_count(3) == 3);
    CHECK(partition_count(4) == Bigint(enumerate_partitions(4).size()));
    // enumeration is the independent oracle for the counting recurrence
    for (unsigned n = 0; n <= 14; ++n)
        CHECK(partition_count(n) == Bigint(enumerate_partitions(n).size()));
}

TEST_CASE("enumerate_partitions order and bounds") {
    CHECK(enumerate_partitions(3, RowBound(2)) ==
          std::vector<Partition>{{3}, {2, 1}});
    CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    for (unsigned n = 1; n <= 10; ++n) {
        const auto all = enumerate_partitions(n);
        for (unsigned r = 1; r <= 4; ++r) {
            const auto bounded = enumerate_partitions(n, RowBound(r));
            std::size_t expect = 0;
            for (const auto& p : all)
                if (p.size() <= r) ++expect;
            CHECK(bounded.size() == expect);
            for (const auto& p : bounded) {
                CHECK(is_valid_partition(p));
                CHECK(weight(p) == n);
                CHECK(p.size() <= r);
            }
        }
    }
}

TEST_CASE("conjugate involution") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({}) == Partition{});
    for (unsigned n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("plane_partition_counts golden values") {
    const auto pl_inf = plane_partition_counts(4, RowBound::inf());
    CHECK(pl_inf == IntegerSeries{1, 1, 3, 6, 13});

    const auto pl1 = plane_partition_counts(20, RowBound(1));
    for (unsigned n = 0; n <= 20; ++n) CHECK(pl1[n] == partition_count(n));

    CHECK(plane_partition_counts(3, RowBound(2))[3] == 5);
    // frozen from the enumeration below, which the series must match
    CHECK(plane_partition_counts(4, RowBound(2))[4] == 10);
    CHECK(Bigint(enumerate_plane_partitions(4, RowBound(2)).size()) == 10);
}

TEST_CASE("plane partition enumeration agrees with the generating function") {
    const RowBound bounds[] = {RowBound(1), RowBound(2), RowBound(3), RowBound(4),
                               RowBound::inf()};
    for (const auto r : bounds) {
        const auto series = plane_partition_counts(12, r);
        CHECK(series[0] == 1);
        for (unsigned n = 1; n <= 12; ++n) {
            const auto pps = enumerate_plane_partitions(n, r);
            CHECK(Bigint(pps.size()) == series[n]);
            for (const auto& pp : pps) {
                CHECK(is_valid_plane_partition(pp, r));
                CHECK(weight(pp) == n);
                CHECK(canonical_plane_partition(pp) == pp);
            }
        }
    }
}

TEST_CASE("plane partition count monotonicity in r") {
    const auto pl_inf = plane_partition_counts(12, RowBound::inf());
    IntegerSeries prev;
    for (unsigned r = 1; r <= 12; ++r) {
        const auto cur = plane_partition_counts(12, RowBound(r));
        if (!prev.empty())
            for (unsigned n = 0; n <= 12; ++n) CHECK(cur[n] >= prev[n]);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(cur[n] >= 0);
            if (r >= n) CHECK(cur[n] == pl_inf[n]);
        }
        prev = cur;
    }
}

TEST_CASE("enumerate_plane_partitions goldens and cap") {
    CHECK(enumerate_plane_partitions(1, RowBound::inf()) ==
          std::vector<PlanePartition>{{{1}}});
    CHECK(enumerate_plane_partitions(2, RowBound::inf()) ==
          std::vector<PlanePartition>{{{2}}, {{1, 1}}, {{1}, {1}}});
    CHECK(enumerate_plane_partitions(3, RowBound(2)).size() == 5);
    CHECK_THROWS_AS(enumerate_plane_partitions(17, RowBound::inf()), ResourceLimitError);
}
