#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace grouppart {

inline constexpr std::uint64_t kDefaultModulusCap = 10'000;

// Multiplicative group mod j decomposed into cyclic parts via CRT, with
// brute-force discrete-log tables for every unit residue.
class UnitGroup {
public:
    explicit UnitGroup(std::uint64_t j, std::uint64_t modulus_cap = kDefaultModulusCap);

    std::uint64_t modulus() const { return j_; }
    std::uint64_t phi() const { return phi_; }
    const std::vector<std::uint64_t>& generator_orders() const { return orders_; }
    std::uint64_t value_order() const { return value_order_; } // lcm of generator orders

    bool is_unit(std::uint64_t residue) const { return unit_[residue]; }
    // exponent vector of a unit residue w.r.t. the generators
    const std::uint32_t* dlog(std::uint64_t residue) const {
        return dlog_flat_.data() + residue * orders_.size();
    }

private:
    std::uint64_t j_;
    std::uint64_t phi_;
    std::uint64_t value_order_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::uint32_t> dlog_flat_;
    std::vector<std::uint8_t> unit_;
};

// Character of (Z/jZ)^*, stored as one exponent per cyclic generator; values
// are exact roots of unity, converted to complex only at evaluation.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);

    std::uint64_t modulus() const { return group_->modulus(); }
    const std::vector<std::uint64_t>& exponents() const { return exps_; }
    const UnitGroup& group() const { return *group_; }
    bool is_principal() const;

    // chi(n): 0 when gcd(n, j) > 1, otherwise exp(2 pi i num/den).
    std::complex<double> operator()(std::int64_t n) const;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> value_exponent(std::int64_t n) const;

    DirichletCharacter pow(std::uint64_t m) const; // chi^m; chi^0 is principal
    DirichletCharacter conj() const;

    bool operator==(const DirichletCharacter& other) const {
        return modulus() == other.modulus() && exps_ == other.exps_;
    }

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint64_t> exps_;
};

// Exactly phi(j) characters; the principal character first, the rest ordered
// lexicographically by exponent vector.
std::vector<DirichletCharacter> characters_mod(std::uint64_t j,
                                               std::uint64_t modulus_cap = kDefaultModulusCap);

std::complex<double> char_value(const DirichletCharacter& chi, std::int64_t n);
DirichletCharacter char_pow(const DirichletCharacter& chi, std::uint64_t m);

// (1/phi(j)) sum_chi conj(chi(a)) chi(b); requires gcd(a, j) = 1.
std::complex<double> orthogonality_average(std::uint64_t j, std::uint64_t a, std::uint64_t b,
                                           std::uint64_t modulus_cap = kDefaultModulusCap);

} // namespace grouppart
