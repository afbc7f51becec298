#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grouppart/abelian.hpp"
#include "grouppart/bigint.hpp"
#include "grouppart/plane_partitions.hpp"
#include "grouppart/rowbound.hpp"

namespace grouppart {

// Ordered sequence of nontrivial classes, weakly decreasing under contains(),
// whose direct sum is target. The empty sequence is the unique group-partition
// of the trivial group.
struct GroupPartition {
    std::vector<AbelianGroupClass> factors;
    AbelianGroupClass target;

    bool operator==(const GroupPartition&) const = default;
};

bool is_valid_group_partition(const GroupPartition& gp);

inline constexpr std::uint64_t kDefaultOrderCap = 1u << 20;

// All group-partitions of g with at most r nontrivial factors, by brute-force
// recursion over direct summands; deduplicated and sorted by (factor count,
// factor text forms). Throws ResourceLimitError when order(g) > order_cap.
std::vector<GroupPartition> enumerate_group_partitions(
    const AbelianGroupClass& g, RowBound r, std::uint64_t order_cap = kDefaultOrderCap);

// pi_r(g): number of group-partitions with at most r factors.
Bigint pi_r(const AbelianGroupClass& g, RowBound r, std::uint64_t order_cap = kDefaultOrderCap);

// sigma_r(g) = pi_r(g) - pi_{r-1}(g), the count with exactly r factors;
// pi_0 is 1 for the trivial group and 0 otherwise.
Bigint sigma_r(const AbelianGroupClass& g, unsigned r, std::uint64_t order_cap = kDefaultOrderCap);

// Bijection with plane partitions for p-groups: row j of the matrix is the
// type profile of factor j. Mixed-prime targets are rejected.
PlanePartition to_plane_partition(const GroupPartition& gp);

// Inverse: factor j has row_j[k] - row_j[k+1] cyclic factors of order p^{k+1}.
GroupPartition from_plane_partition(const PlanePartition& pp, std::uint64_t p);

// a_r(n) = prod_i PL_r(m_i) over n = prod p_i^{m_i}; a_r(1) = 1.
Bigint a_r(std::uint64_t n, RowBound r, std::uint64_t trial_bound = kDefaultTrialBound);

// Pure oracle: sum of pi_r over all classes of order n, never consulting the
// generating function or the bijection.
Bigint a_r_bruteforce(std::uint64_t n, RowBound r, std::uint64_t order_cap = kDefaultOrderCap);

// b_r(n) = a_r(n) - a_{r-1}(n) with a_0(n) := [n == 1].
Bigint b_r(std::uint64_t n, unsigned r, std::uint64_t trial_bound = kDefaultTrialBound);

} // namespace grouppart
