#pragma once

#include <vector>

#include "grouppart/bigint.hpp"
#include "grouppart/partitions.hpp"
#include "grouppart/rowbound.hpp"

namespace grouppart {

// Matrix of positive integers, weakly decreasing along each row and down each
// column. Canonical form stores rows without trailing zeros and drops empty
// rows; equality is matrix equality of canonical forms.
using PlanePartition = std::vector<std::vector<unsigned>>;

bool is_valid_plane_partition(const PlanePartition& pp, RowBound max_rows = RowBound::inf());
unsigned weight(const PlanePartition& pp);
PlanePartition canonical_plane_partition(PlanePartition pp);

// q-expansion coefficients, index = power of q.
using IntegerSeries = std::vector<Bigint>;

// Coefficients of prod_{m>=1} (1-q^m)^{-min(m,r)} through order N, so
// coefficient k equals PL_r(k). Exact integer arithmetic, each factor
// expanded via binomials C(e-1+k, k).
IntegerSeries plane_partition_counts(unsigned N, RowBound r);

inline constexpr unsigned kPlanePartitionEnumCap = 16;

// All plane partitions of weight n with at most r rows, in row-major
// lexicographically decreasing order ((2): [[2]], [[1,1]], [[1],[1]]).
// Throws ResourceLimitError when n exceeds enum_cap.
std::vector<PlanePartition> enumerate_plane_partitions(
    unsigned n, RowBound r, unsigned enum_cap = kPlanePartitionEnumCap);

} // namespace grouppart
