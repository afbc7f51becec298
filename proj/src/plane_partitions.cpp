#include "grouppart/plane_partitions.hpp"

#include <algorithm>

#include "grouppart/errors.hpp"

namespace grouppart {

bool is_valid_plane_partition(const PlanePartition& pp, RowBound max_rows) {
    if (!max_rows.allows(pp.size())) return false;
    for (std::size_t j = 0; j < pp.size(); ++j) {
        const auto& row = pp[j];
        if (row.empty()) return false;
        if (!is_valid_partition(row)) return false;
        if (j > 0) {
            const auto& above = pp[j - 1];
            if (row.size() > above.size()) return false;
            for (std::size_t k = 0; k < row.size(); ++k)
                if (row[k] > above[k]) return false;
        }
    }
    return true;
}

unsigned weight(const PlanePartition& pp) {
    unsigned w = 0;
    for (const auto& row : pp) w += weight(row);
    return w;
}

PlanePartition canonical_plane_partition(PlanePartition pp) {
    for (auto& row : pp)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!pp.empty() && pp.back().empty()) pp.pop_back();
    return pp;
}

IntegerSeries plane_partition_counts(unsigned N, RowBound r) {
    IntegerSeries coeff(N + 1, 0);
    coeff[0] = 1;
    for (unsigned m = 1; m <= N; ++m) {
        unsigned e = r.clamp(m);
        unsigned K = N / m;
        // (1-q^m)^{-e} = sum_k C(e-1+k, k) q^{mk}
        std::vector<Bigint> factor(K + 1);
        factor[0] = 1;
        for (unsigned k = 1; k <= K; ++k) factor[k] = factor[k - 1] * (e - 1 + k) / k;
        IntegerSeries next(N + 1, 0);
        for (unsigned i = 0; i <= N; ++i) {
            if (coeff[i].is_zero()) continue;
            for (unsigned k = 0; i + k * m <= N; ++k) next[i + k * m] += coeff[i] * factor[k];
        }
        coeff = std::move(next);
    }
    return coeff;
}

namespace {

void rows_rec(const std::vector<unsigned>& bound, unsigned rem, unsigned rows_left,
              PlanePartition& cur, std::vector<PlanePartition>& out);

// Extends the row under construction entry by entry; entries are tried in
// decreasing order and row termination last, which yields the row-major
// lexicographically decreasing output order.
void row_rec(std::size_t k, unsigned prev_entry, const std::vector<unsigned>& bound, unsigned rem,
             std::vector<unsigned>& row, unsigned rows_left, PlanePartition& cur,
             std::vector<PlanePartition>& out) {
    unsigned cap = k < bound.size() ? std::min(prev_entry, bound[k]) : 0;
    cap = std::min(cap, rem);
    for (unsigned v = cap; v >= 1; --v) {
        row.push_back(v);
        row_rec(k + 1, v, bound, rem - v, row, rows_left, cur, out);
        row.pop_back();
    }
    if (k > 0) {
        cur.push_back(row);
        rows_rec(row, rem, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

void rows_rec(const std::vector<unsigned>& bound, unsigned rem, unsigned rows_left,
              PlanePartition& cur, std::vector<PlanePartition>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    if (rows_left == 0) return;
    std::vector<unsigned> row;
    row_rec(0, rem, bound, rem, row, rows_left, cur, out);
}

} // namespace

std::vector<PlanePartition> enumerate_plane_partitions(unsigned n, RowBound r, unsigned enum_cap) {
    if (n > enum_cap)
        throw ResourceLimitError("plane partition enumeration cap exceeded: n = " +
                                 std::to_string(n) + " > " + std::to_string(enum_cap));
    std::vector<PlanePartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    unsigned rows = r.unbounded() ? n : std::min<unsigned>(r.value(), n);
    std::vector<unsigned> top_bound(n, n); // first row unconstrained from above
    PlanePartition cur;
    rows_rec(top_bound, n, rows, cur, out);
    return out;
}

} // namespace grouppart
