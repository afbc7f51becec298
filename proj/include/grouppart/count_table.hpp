#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grouppart/rowbound.hpp"

namespace grouppart {

// Dense table of a_r(n) (or b_r(n)) for 1 <= n <= x_max. Entries are exact:
// prod_i PL_r(m_i) with sum m_i <= 63 stays below 2^63, so 64-bit storage
// never truncates for any x_max < 2^63.
struct CountTable {
    RowBound r = RowBound::inf();
    std::uint64_t x_max = 0;
    std::string value_label = "a_r";
    std::vector<std::uint64_t> values; // index n; values[0] unused

    std::uint64_t at(std::uint64_t n) const;

    void write_csv(std::ostream& os) const;  // header "n,a_r"
    void write_json(std::ostream& os) const; // [[n, "value"], ...] decimal strings
};

} // namespace grouppart
