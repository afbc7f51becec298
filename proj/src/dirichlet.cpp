#include "grouppart/dirichlet.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grouppart/errors.hpp"
#include "grouppart/primes.hpp"

namespace grouppart {

namespace {

std::uint64_t mulmod_small(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a * b) % m; // moduli are capped well below 2^32
}

std::uint64_t powmod_small(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod_small(r, base, m);
        base = mulmod_small(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t phi_of_prime_power(std::uint64_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i + 1 < e; ++i) q *= p;
    return q * (p - 1);
}

// Smallest primitive root mod q = p^e, p odd.
std::uint64_t primitive_root(std::uint64_t q, std::uint64_t phi) {
    const auto phi_factors = factorize(phi);
    for (std::uint64_t g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool ok = true;
        for (const auto& [ell, e] : phi_factors) {
            if (powmod_small(g, phi / ell, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found (non prime-power modulus?)");
}

struct Component {
    std::uint64_t q;                       // p^e
    std::vector<std::uint64_t> gens;       // generators of (Z/qZ)^*
    std::vector<std::uint64_t> gen_orders; // matching orders
    std::vector<std::uint32_t> dlog;       // q * gens.size(), filled on units
};

Component build_component(std::uint64_t p, unsigned e) {
    Component c;
    c.q = 1;
    for (unsigned i = 0; i < e; ++i) c.q *= p;
    if (p == 2) {
        if (e == 1) {
            // trivial unit group
            c.dlog.assign(0, 0);
            return c;
        }
        if (e == 2) {
            c.gens = {3};
            c.gen_orders = {2};
        } else {
            c.gens = {c.q - 1, 5}; // {-1} x <5>
            c.gen_orders = {2, c.q / 4};
        }
    } else {
        const std::uint64_t phi = phi_of_prime_power(p, e);
        c.gens = {primitive_root(c.q, phi)};
        c.gen_orders = {phi};
    }
    c.dlog.assign(c.q * c.gens.size(), 0);
    if (c.gens.size() == 1) {
        std::uint64_t x = 1;
        for (std::uint64_t t = 0; t < c.gen_orders[0]; ++t) {
            c.dlog[x] = static_cast<std::uint32_t>(t);
            x = mulmod_small(x, c.gens[0], c.q);
        }
    } else {
        std::uint64_t xs = 1;
        for (std::uint64_t s = 0; s < c.gen_orders[0]; ++s) {
            std::uint64_t x = xs;
            for (std::uint64_t t = 0; t < c.gen_orders[1]; ++t) {
                c.dlog[2 * x] = static_cast<std::uint32_t>(s);
                c.dlog[2 * x + 1] = static_cast<std::uint32_t>(t);
                x = mulmod_small(x, c.gens[1], c.q);
            }
            xs = mulmod_small(xs, c.gens[0], c.q);
        }
    }
    return c;
}

} // namespace

UnitGroup::UnitGroup(std::uint64_t j, std::uint64_t modulus_cap) : j_(j) {
    if (j < 1) throw std::invalid_argument("UnitGroup: modulus must be >= 1");
    if (j > modulus_cap)
        throw ResourceLimitError("UnitGroup: modulus " + std::to_string(j) + " exceeds cap " +
                                 std::to_string(modulus_cap));
    std::vector<Component> comps;
    for (const auto& [p, e] : factorize(j)) comps.push_back(build_component(p, e));
    for (const auto& c : comps)
        for (std::uint64_t o : c.gen_orders) orders_.push_back(o);
    phi_ = 1;
    for (std::uint64_t o : orders_) phi_ *= o;
    value_order_ = 1;
    for (std::uint64_t o : orders_) value_order_ = std::lcm(value_order_, o);
    unit_.assign(j, 0);
    dlog_flat_.assign(j * orders_.size(), 0);
    for (std::uint64_t n = 0; n < j; ++n) {
        if (std::gcd(n, j) != 1) continue;
        unit_[n] = 1;
        std::size_t slot = 0;
        for (const auto& c : comps) {
            const std::uint64_t rn = n % c.q;
            for (std::size_t gi = 0; gi < c.gen_orders.size(); ++gi)
                dlog_flat_[n * orders_.size() + slot + gi] = c.dlog[rn * c.gen_orders.size() + gi];
            slot += c.gen_orders.size();
        }
    }
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    if (exps_.size() != group_->generator_orders().size())
        throw std::invalid_argument("DirichletCharacter: exponent vector size mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] >= group_->generator_orders()[i])
            throw std::invalid_argument("DirichletCharacter: exponent exceeds generator order");
}

bool DirichletCharacter::is_principal() const {
    for (std::uint64_t e : exps_)
        if (e) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> DirichletCharacter::value_exponent(
    std::int64_t n) const {
    const std::uint64_t j = group_->modulus();
    std::uint64_t residue = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(j)) +
                                                        static_cast<std::int64_t>(j)) %
                                                       static_cast<std::int64_t>(j));
    if (!group_->is_unit(residue)) return std::nullopt;
    const std::uint64_t q = group_->value_order();
    const auto& orders = group_->generator_orders();
    const std::uint32_t* d = group_->dlog(residue);
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const std::uint64_t turn = (exps_[i] * d[i]) % orders[i]; // e_i d_i / ord_i mod 1
        num = (num + turn * (q / orders[i])) % q;
    }
    return std::make_pair(num, q);
}

std::complex<double> DirichletCharacter::operator()(std::int64_t n) const {
    const auto ve = value_exponent(n);
    if (!ve) return 0.0;
    const double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(ve->first) /
                         static_cast<double>(ve->second);
    return {std::cos(angle), std::sin(angle)};
}

DirichletCharacter DirichletCharacter::pow(std::uint64_t m) const {
    std::vector<std::uint64_t> e(exps_.size());
    const auto& orders = group_->generator_orders();
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = (exps_[i] * (m % orders[i])) % orders[i];
    return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<std::uint64_t> e(exps_.size());
    const auto& orders = group_->generator_orders();
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = (orders[i] - exps_[i]) % orders[i];
    return DirichletCharacter(group_, std::move(e));
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t j, std::uint64_t modulus_cap) {
    auto group = std::make_shared<const UnitGroup>(j, modulus_cap);
    const auto& orders = group->generator_orders();
    std::vector<DirichletCharacter> out;
    out.reserve(group->phi());
    std::vector<std::uint64_t> exps(orders.size(), 0);
    while (true) {
        out.emplace_back(group, exps);
        // lexicographic successor: increment the last coordinate
        std::size_t i = orders.size();
        while (i > 0 && exps[i - 1] + 1 == orders[i - 1]) {
            exps[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++exps[i - 1];
    }
    return out;
}

std::complex<double> char_value(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

DirichletCharacter char_pow(const DirichletCharacter& chi, std::uint64_t m) { return chi.pow(m); }

std::complex<double> orthogonality_average(std::uint64_t j, std::uint64_t a, std::uint64_t b,
                                           std::uint64_t modulus_cap) {
    if (j >= 1 && std::gcd(a, j) != 1)
        throw std::invalid_argument("orthogonality_average: gcd(a, j) must be 1");
    const auto chars = characters_mod(j, modulus_cap);
    std::complex<double> sum = 0.0;
    for (const auto& chi : chars)
        sum += std::conj(chi(static_cast<std::int64_t>(a))) * chi(static_cast<std::int64_t>(b));
    return sum / static_cast<double>(chars.size());
}

} // namespace grouppart
