#include "grouppart/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace grouppart {

AbelianGroupClass trivial_group() { return {}; }

AbelianGroupClass cyclic_group(std::uint64_t p, unsigned e) {
    return p_group(p, Partition{e});
}

AbelianGroupClass p_group(std::uint64_t p, Partition exponents) {
    if (!is_prime(p)) throw std::invalid_argument("p_group: " + std::to_string(p) + " is not prime");
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
    AbelianGroupClass g;
    if (!exponents.empty()) g.components[p] = std::move(exponents);
    return g;
}

bool is_canonical_class(const AbelianGroupClass& g) {
    for (const auto& [p, exps] : g.components) {
        if (!is_prime(p)) return false;
        if (exps.empty() || !is_valid_partition(exps)) return false;
    }
    return true;
}

Bigint order(const AbelianGroupClass& g) {
    Bigint n = 1;
    for (const auto& [p, exps] : g.components) {
        Bigint pk = 1;
        for (unsigned i = 0; i < weight(exps); ++i) pk *= p;
        n *= pk;
    }
    return n;
}

AbelianGroupClass p_component(const AbelianGroupClass& g, std::uint64_t p) {
    AbelianGroupClass out;
    auto it = g.components.find(p);
    if (it != g.components.end()) out.components.insert(*it);
    return out;
}

std::vector<unsigned> type_profile(const AbelianGroupClass& g, std::uint64_t p) {
    auto it = g.components.find(p);
    if (it == g.components.end()) return {};
    return conjugate(it->second);
}

bool contains(const AbelianGroupClass& a, const AbelianGroupClass& b) {
    for (const auto& [p, exps] : b.components) {
        const auto pb = conjugate(exps);
        const auto pa = type_profile(a, p);
        if (pb.size() > pa.size()) return false;
        for (std::size_t k = 0; k < pb.size(); ++k)
            if (pb[k] > pa[k]) return false;
    }
    return true;
}

AbelianGroupClass direct_sum(std::span<const AbelianGroupClass> parts) {
    AbelianGroupClass out;
    for (const auto& g : parts) {
        for (const auto& [p, exps] : g.components) {
            auto& dst = out.components[p];
            dst.insert(dst.end(), exps.begin(), exps.end());
        }
    }
    for (auto& [p, exps] : out.components) std::sort(exps.begin(), exps.end(), std::greater<>());
    return out;
}

AbelianGroupClass direct_sum(const AbelianGroupClass& a, const AbelianGroupClass& b) {
    const AbelianGroupClass parts[] = {a, b};
    return direct_sum(std::span<const AbelianGroupClass>(parts));
}

std::optional<AbelianGroupClass> summand_defect(const AbelianGroupClass& g,
                                                const AbelianGroupClass& f) {
    AbelianGroupClass out = g;
    for (const auto& [p, fexps] : f.components) {
        auto it = out.components.find(p);
        if (it == out.components.end()) return std::nullopt;
        Partition rest = it->second; // descending
        for (unsigned e : fexps) {
            auto pos = std::find(rest.begin(), rest.end(), e);
            if (pos == rest.end()) return std::nullopt;
            rest.erase(pos);
        }
        if (rest.empty())
            out.components.erase(it);
        else
            it->second = std::move(rest);
    }
    return out;
}

std::vector<AbelianGroupClass> groups_of_order(std::uint64_t n, std::uint64_t trial_bound) {
    if (n == 0) throw std::invalid_argument("groups_of_order: n must be >= 1");
    const auto factors = factorize(n, trial_bound);
    std::vector<AbelianGroupClass> out;
    out.push_back(trivial_group());
    for (const auto& [p, e] : factors) {
        const auto parts = enumerate_partitions(e);
        std::vector<AbelianGroupClass> next;
        next.reserve(out.size() * parts.size());
        for (const auto& g : out)
            for (const auto& lambda : parts) {
                AbelianGroupClass h = g;
                h.components[p] = lambda;
                next.push_back(std::move(h));
            }
        out = std::move(next);
    }
    return out;
}

std::string to_string(const AbelianGroupClass& g) {
    if (g.is_trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, exps] : g.components) {
        if (!first) os << " * ";
        first = false;
        os << p << "^[";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) os << ',';
            os << exps[i];
        }
        os << ']';
    }
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("parse_group: bad ") + what + ": " + std::string(s));
    return v;
}

} // namespace

AbelianGroupClass parse_group(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("parse_group: empty input");
    if (s == "1") return trivial_group();
    AbelianGroupClass g;
    while (true) {
        const auto star = s.find('*');
        std::string_view tok = trim(star == std::string_view::npos ? s : s.substr(0, star));
        const auto caret = tok.find("^[");
        if (caret == std::string_view::npos || tok.back() != ']')
            throw std::invalid_argument("parse_group: expected p^[e1,e2,...], got: " + std::string(tok));
        const std::uint64_t p = parse_u64(trim(tok.substr(0, caret)), "prime");
        if (!is_prime(p))
            throw std::invalid_argument("parse_group: " + std::to_string(p) + " is not prime");
        if (g.components.count(p))
            throw std::invalid_argument("parse_group: duplicate prime " + std::to_string(p));
        std::string_view body = tok.substr(caret + 2, tok.size() - caret - 3);
        Partition exps;
        while (true) {
            const auto comma = body.find(',');
            std::string_view item = trim(comma == std::string_view::npos ? body : body.substr(0, comma));
            const std::uint64_t e = parse_u64(item, "exponent");
            if (e == 0 || e > 1u << 20)
                throw std::invalid_argument("parse_group: exponent out of range: " + std::string(item));
            exps.push_back(static_cast<unsigned>(e));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        std::sort(exps.begin(), exps.end(), std::greater<>());
        g.components[p] = std::move(exps);
        if (star == std::string_view::npos) break;
        s = s.substr(star + 1);
        if (trim(s).empty()) throw std::invalid_argument("parse_group: trailing '*'");
    }
    return g;
}

} // namespace grouppart
