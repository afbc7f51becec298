#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grouppart {

// Row/factor bound: a positive integer r, or unbounded ("inf").
class RowBound {
public:
    constexpr RowBound(unsigned r) : r_(r) {
        if (r == 0) throw std::invalid_argument("RowBound must be >= 1");
    }

    static constexpr RowBound inf() { return RowBound(kInf, Tag{}); }

    constexpr bool unbounded() const { return r_ == kInf; }

    // Only meaningful when bounded.
    constexpr unsigned value() const { return r_; }

    // min{m, r}, with min{m, inf} = m.
    constexpr unsigned clamp(unsigned m) const { return unbounded() ? m : std::min(m, r_); }

    constexpr bool allows(std::size_t count) const { return unbounded() || count <= r_; }

    friend constexpr bool operator==(RowBound a, RowBound b) { return a.r_ == b.r_; }

private:
    struct Tag {};
    constexpr RowBound(unsigned r, Tag) : r_(r) {}
    static constexpr unsigned kInf = std::numeric_limits<unsigned>::max();
    unsigned r_;
};

std::string to_string(RowBound r);

// Accepts a positive integer or the literal "inf".
RowBound parse_row_bound(std::string_view s);

} // namespace grouppart
