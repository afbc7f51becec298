#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grouppart/bigint.hpp"
#include "grouppart/partitions.hpp"
#include "grouppart/primes.hpp"

namespace grouppart {

// Isomorphism class of a finite abelian group: for each prime p, the weakly
// decreasing exponents of its cyclic factors Z/p^e. The trivial group is the
// empty map.
struct AbelianGroupClass {
    std::map<std::uint64_t, Partition> components;

    bool is_trivial() const { return components.empty(); }
    bool operator==(const AbelianGroupClass&) const = default;
    auto operator<=>(const AbelianGroupClass&) const = default;
};

// Factories validate primality and canonicalize (exponents sorted descending).
AbelianGroupClass trivial_group();
AbelianGroupClass cyclic_group(std::uint64_t p, unsigned e);
AbelianGroupClass p_group(std::uint64_t p, Partition exponents);

bool is_canonical_class(const AbelianGroupClass& g);

Bigint order(const AbelianGroupClass& g);

// Component of g at prime p (trivial if absent).
AbelianGroupClass p_component(const AbelianGroupClass& g, std::uint64_t p);

// Conjugate type at p: profile[k-1] = number of cyclic p-factors of order >= p^k.
std::vector<unsigned> type_profile(const AbelianGroupClass& g, std::uint64_t p);

// Embeddability order of Young-diagram containment per prime:
// true iff type_profile(b, p) <= type_profile(a, p) entrywise for every p.
bool contains(const AbelianGroupClass& a, const AbelianGroupClass& b);

AbelianGroupClass direct_sum(std::span<const AbelianGroupClass> parts);
AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b);

// If f's cyclic-factor multiset is contained per prime in g's, the class of
// the complementary direct summand; otherwise nullopt.
std::optional<AbelianGroupClass> summand_defect(const AbelianGroupClass& g,
                                                const AbelianGroupClass& f);

// All classes of order n (count = prod P(m_i)); deterministic order: primes
// ascending, per-prime partitions lexicographically decreasing, later primes
// varying fastest.
std::vector<AbelianGroupClass> groups_of_order(std::uint64_t n,
                                               std::uint64_t trial_bound = kDefaultTrialBound);

// Text form, bit-exact: "2^[2,1,1] * 3^[1]"; the trivial group prints as "1".
// parse_group accepts exponents in any order and canonicalizes; the printer
// always emits canonical form, so the two are inverse on canonical text.
std::string to_string(const AbelianGroupClass& g);
AbelianGroupClass parse_group(std::string_view text);

} // namespace grouppart
