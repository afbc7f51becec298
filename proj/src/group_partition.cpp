#include "grouppart/group_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grouppart/errors.hpp"

namespace grouppart {

bool is_valid_group_partition(const GroupPartition& gp) {
    for (const auto& f : gp.factors)
        if (f.is_trivial() || !is_canonical_class(f)) return false;
    for (std::size_t j = 0; j + 1 < gp.factors.size(); ++j)
        if (!contains(gp.factors[j], gp.factors[j + 1])) return false;
    return direct_sum(std::span<const AbelianGroupClass>(gp.factors)) == gp.target;
}

namespace {

// Nontrivial sub-multisets of g's cyclic factors, i.e. candidate direct
// summands. Deterministic order; the trivial choice is skipped.
std::vector<AbelianGroupClass> proper_summands(const AbelianGroupClass& g) {
    struct Run {
        std::uint64_t p;
        unsigned exponent;
        unsigned count;
    };
    std::vector<Run> runs;
    for (const auto& [p, exps] : g.components) {
        std::size_t i = 0;
        while (i < exps.size()) {
            std::size_t j = i;
            while (j < exps.size() && exps[j] == exps[i]) ++j;
            runs.push_back({p, exps[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    std::vector<AbelianGroupClass> out;
    std::vector<unsigned> take(runs.size(), 0);
    while (true) {
        // advance the odometer
        std::size_t i = 0;
        while (i < runs.size() && take[i] == runs[i].count) {
            take[i] = 0;
            ++i;
        }
        if (i == runs.size()) break;
        ++take[i];
        AbelianGroupClass f;
        for (std::size_t k = 0; k < runs.size(); ++k)
            for (unsigned c = 0; c < take[k]; ++c) f.components[runs[k].p].push_back(runs[k].exponent);
        for (auto& [p, exps] : f.components) std::sort(exps.begin(), exps.end(), std::greater<>());
        out.push_back(std::move(f));
    }
    return out;
}

void walk_chains(const AbelianGroupClass& remainder, const AbelianGroupClass* prev, RowBound r,
                 std::size_t used, std::vector<AbelianGroupClass>& chain,
                 const std::function<void(const std::vector<AbelianGroupClass>&)>& emit) {
    if (remainder.is_trivial()) {
        emit(chain);
        return;
    }
    if (!r.allows(used + 1)) return;
    for (const auto& f : proper_summands(remainder)) {
        if (prev && !contains(*prev, f)) continue;
        auto rest = summand_defect(remainder, f);
        chain.push_back(f);
        walk_chains(*rest, &chain.back(), r, used + 1, chain, emit);
        chain.pop_back();
    }
}

void check_order_cap(const AbelianGroupClass& g, std::uint64_t order_cap) {
    if (order(g) > order_cap)
        throw ResourceLimitError("group-partition enumeration: order exceeds cap " +
                                 std::to_string(order_cap));
}

} // namespace

std::vector<GroupPartition> enumerate_group_partitions(const AbelianGroupClass& g, RowBound r,
                                                       std::uint64_t order_cap) {
    check_order_cap(g, order_cap);
    std::vector<GroupPartition> out;
    std::vector<AbelianGroupClass> chain;
    chain.reserve(64); // deeper chains would need order > 2^64
    walk_chains(g, nullptr, r, 0, chain,
                [&](const std::vector<AbelianGroupClass>& c) { out.push_back({c, g}); });
    // Deduplicate by canonical text form and fix the output order.
    auto key = [](const GroupPartition& gp) {
        std::vector<std::string> k;
        k.reserve(gp.factors.size());
        for (const auto& f : gp.factors) k.push_back(to_string(f));
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const GroupPartition& x, const GroupPartition& y) {
        if (x.factors.size() != y.factors.size()) return x.factors.size() < y.factors.size();
        return key(x) < key(y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Bigint pi_r(const AbelianGroupClass& g, RowBound r, std::uint64_t order_cap) {
    check_order_cap(g, order_cap);
    Bigint count = 0;
    std::vector<AbelianGroupClass> chain;
    chain.reserve(64);
    walk_chains(g, nullptr, r, 0, chain, [&](const std::vector<AbelianGroupClass>&) { ++count; });
    return count;
}

Bigint sigma_r(const AbelianGroupClass& g, unsigned r, std::uint64_t order_cap) {
    if (r == 0) throw std::invalid_argument("sigma_r: r must be >= 1");
    const Bigint hi = pi_r(g, RowBound(r), order_cap);
    const Bigint lo = r == 1 ? Bigint(g.is_trivial() ? 1 : 0) : pi_r(g, RowBound(r - 1), order_cap);
    return hi - lo;
}

PlanePartition to_plane_partition(const GroupPartition& gp) {
    std::uint64_t p = 0;
    for (const auto& f : gp.factors)
        for (const auto& [q, exps] : f.components) {
            if (p == 0) p = q;
            if (q != p)
                throw std::invalid_argument("to_plane_partition: mixed primes in group-partition");
        }
    for (const auto& [q, exps] : gp.target.components) {
        if (p == 0) p = q;
        if (q != p) throw std::invalid_argument("to_plane_partition: mixed-prime target");
    }
    PlanePartition rows;
    rows.reserve(gp.factors.size());
    for (const auto& f : gp.factors) rows.push_back(type_profile(f, p));
    return rows;
}

GroupPartition from_plane_partition(const PlanePartition& pp, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("from_plane_partition: p must be prime");
    if (!is_valid_plane_partition(pp))
        throw std::invalid_argument("from_plane_partition: not a valid plane partition");
    GroupPartition gp;
    gp.factors.reserve(pp.size());
    for (const auto& row : pp) gp.factors.push_back(p_group(p, conjugate(row)));
    gp.target = direct_sum(std::span<const AbelianGroupClass>(gp.factors));
    return gp;
}

Bigint a_r(std::uint64_t n, RowBound r, std::uint64_t trial_bound) {
    const auto factors = factorize(n, trial_bound);
    unsigned max_e = 0;
    for (const auto& [p, e] : factors) max_e = std::max(max_e, e);
    const auto pl = plane_partition_counts(max_e, r);
    Bigint result = 1;
    for (const auto& [p, e] : factors) result *= pl[e];
    return result;
}

Bigint a_r_bruteforce(std::uint64_t n, RowBound r, std::uint64_t order_cap) {
    if (n > order_cap)
        throw ResourceLimitError("a_r_bruteforce: n exceeds enumeration cap");
    Bigint total = 0;
    for (const auto& g : groups_of_order(n)) total += pi_r(g, r, order_cap);
    return total;
}

Bigint b_r(std::uint64_t n, unsigned r, std::uint64_t trial_bound) {
    if (r == 0) throw std::invalid_argument("b_r: r must be >= 1");
    const Bigint hi = a_r(n, RowBound(r), trial_bound);
    const Bigint lo = r == 1 ? Bigint(n == 1 ? 1 : 0) : a_r(n, RowBound(r - 1), trial_bound);
    return hi - lo;
}

} // namespace grouppart
