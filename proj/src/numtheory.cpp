#include "macias/numtheory.hpp"

#include <numeric>

namespace macias::numtheory {

Natural gcd(Natural a, Natural b) {
    return Natural{std::gcd(a.value(), b.value())};
}

Natural checked_mul(Natural a, Natural b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a.value(), b.value(), &out) || out > Natural::kMax)
        throw DomainError("product exceeds 63-bit range");
    return Natural{out};
}

Natural checked_pow(Natural base, std::uint32_t exp) {
    if (exp == 0)
        throw DomainError("checked_pow requires exp >= 1");
    Natural acc = base;
    for (std::uint32_t i = 1; i < exp; ++i)
        acc = checked_mul(acc, base);
    return acc;
}

Natural lcm(Natural a, Natural b) {
    const Natural g = gcd(a, b);
    return checked_mul(Natural{a.value() / g.value()}, b);
}

bool is_prime(Natural n) {
    const std::uint64_t v = n.value();
    if (v < 2)
        return false;
    if (v % 2 == 0)
        return v == 2;
    if (v % 3 == 0)
        return v == 3;
    // 6k +/- 1 wheel
    for (std::uint64_t d = 5; d <= v / d; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0)
            return false;
    }
    return true;
}

Factorization factorize(Natural n) {
    Factorization f;
    std::uint64_t rest = n.value();

    auto extract = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            f.pairs.push_back(PrimePower{Natural{p}, e});
    };

    extract(2);
    extract(3);
    for (std::uint64_t d = 5; d <= rest / d; d += 6) {
        extract(d);
        extract(d + 2);
    }
    if (rest > 1)
        f.pairs.push_back(PrimePower{Natural{rest}, 1});
    return f;
}

Natural Factorization::value() const {
    Natural acc{1};
    for (const auto& pp : pairs)
        acc = checked_mul(acc, checked_pow(pp.prime, pp.exponent));
    return acc;
}

Radical Radical::from_squarefree(Natural v) {
    for (const auto& pp : factorize(v).pairs) {
        if (pp.exponent > 1)
            throw DomainError("value is not squarefree");
    }
    return Radical{v};
}

Radical radical(Natural n) {
    Natural acc{1};
    for (const auto& pp : factorize(n).pairs)
        acc = checked_mul(acc, pp.prime);
    return Radical{acc};
}

std::optional<PrimePower> prime_power_decompose(Natural n) {
    const Factorization f = factorize(n);
    if (f.pairs.size() != 1)
        return std::nullopt;
    return f.pairs.front();
}

} // namespace macias::numtheory
