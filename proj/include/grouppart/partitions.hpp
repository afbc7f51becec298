#pragma once

#include <vector>

#include "grouppart/bigint.hpp"
#include "grouppart/rowbound.hpp"

namespace grouppart {

// Weakly decreasing sequence of positive integers.
using Partition = std::vector<unsigned>;

bool is_valid_partition(const Partition& p);
unsigned weight(const Partition& p);

// Transpose of the Young diagram: conj[k-1] = #{i : p[i] >= k}.
Partition conjugate(const Partition& p);

// P(n); P(0) = 1.
Bigint partition_count(unsigned n);

// All partitions of n with at most max_parts parts, in lexicographically
// decreasing order (e.g. n=4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)).
std::vector<Partition> enumerate_partitions(unsigned n, RowBound max_parts = RowBound::inf());

} // namespace grouppart
