#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "macias/errors.hpp"

namespace macias::numtheory {

/// A point of the space: a positive integer representable in 63 bits.
/// Zero is rejected at construction; arithmetic on Naturals is checked
/// and throws DomainError instead of wrapping.
class Natural {
public:
    static constexpr std::uint64_t kMax = (std::uint64_t{1} << 63) - 1;

    explicit Natural(std::uint64_t value) : value_(value) {
        if (value == 0)
            throw DomainError("Natural must be >= 1");
        if (value > kMax)
            throw DomainError("Natural exceeds 63-bit range");
    }

    std::uint64_t value() const noexcept { return value_; }

    auto operator<=>(const Natural&) const = default;

private:
    std::uint64_t value_;
};

/// Shorthand constructor, mostly for call sites with literal values.
inline Natural nat(std::uint64_t v) { return Natural{v}; }

struct PrimePower {
    Natural prime;
    std::uint32_t exponent;

    auto operator<=>(const PrimePower&) const = default;
};

/// Prime decomposition, strictly ascending by prime. Empty for 1.
struct Factorization {
    std::vector<PrimePower> pairs;

    /// Reconstructs the factored value (checked product).
    Natural value() const;
};

/// A squarefree Natural: the product of distinct primes. Obtain via
/// radical() or the validating factory.
class Radical {
public:
    static Radical from_squarefree(Natural v);

    Natural value() const noexcept { return value_; }

    auto operator<=>(const Radical&) const = default;

private:
    explicit Radical(Natural v) : value_(v) {}

    friend Radical radical(Natural n);
    Natural value_;
};

Natural gcd(Natural a, Natural b);

/// Checked a * b; throws DomainError past 2^63-1.
Natural checked_mul(Natural a, Natural b);

/// Checked base^exp, exp >= 1.
Natural checked_pow(Natural base, std::uint32_t exp);

/// lcm via a / gcd * b, checked.
Natural lcm(Natural a, Natural b);

/// Deterministic trial division. Intended for desk-scale inputs.
bool is_prime(Natural n);

Factorization factorize(Natural n);

/// Product of the distinct primes dividing n; radical(1) = 1.
Radical radical(Natural n);

/// (p, k) with p^k = n when n is a prime power > 1; empty for n = 1
/// and for n with two or more distinct prime factors.
std::optional<PrimePower> prime_power_decompose(Natural n);

} // namespace macias::numtheory
