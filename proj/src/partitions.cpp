#include "grouppart/partitions.hpp"

#include <charconv>
#include <stdexcept>

namespace grouppart {

std::string to_string(RowBound r) {
    return r.unbounded() ? "inf" : std::to_string(r.value());
}

RowBound parse_row_bound(std::string_view s) {
    if (s == "inf") return RowBound::inf();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw std::invalid_argument("row bound must be a positive integer or \"inf\": " +
                                    std::string(s));
    return RowBound(v);
}

bool is_valid_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

unsigned weight(const Partition& p) {
    unsigned w = 0;
    for (unsigned v : p) w += v;
    return w;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition conj(p[0], 0);
    for (unsigned v : p)
        for (unsigned k = 0; k < v; ++k) conj[k] += 1;
    return conj;
}

Bigint partition_count(unsigned n) {
    std::vector<Bigint> table(n + 1, 0);
    table[0] = 1;
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = m; k <= n; ++k) table[k] += table[k - m];
    return table[n];
}

namespace {

void partitions_rec(unsigned rem, unsigned max_part, std::uint64_t slots_left,
                    Partition& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    if (slots_left == 0) return;
    for (unsigned v = std::min(max_part, rem); v >= 1; --v) {
        if (static_cast<std::uint64_t>(v) * slots_left < rem) break; // smaller v cannot fit either
        cur.push_back(v);
        partitions_rec(rem - v, v, slots_left - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(unsigned n, RowBound max_parts) {
    std::vector<Partition> out;
    Partition cur;
    std::uint64_t slots = max_parts.unbounded() ? n : std::min<unsigned>(max_parts.value(), n);
    if (n == 0) slots = 0;
    partitions_rec(n, n, slots, cur, out);
    return out;
}

} // namespace grouppart
