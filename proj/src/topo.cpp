#include "macias/topo.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace macias::topo {

using numtheory::checked_mul;
using numtheory::gcd;
using numtheory::radical;

FiniteUnionOpen::FiniteUnionOpen(std::vector<BasicOpen> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::unique(parts_.begin(), parts_.end()), parts_.end());
}

ExplicitSet ExplicitSet::of(std::vector<Natural> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return ExplicitSet{std::move(elements)};
}

BasicOpen basic_open(Natural n) {
    return BasicOpen{radical(n)};
}

BasicOpen intersect_basic(const BasicOpen& a, const BasicOpen& b) {
    return BasicOpen{radical(checked_mul(a.key.value(), b.key.value()))};
}

std::vector<Natural> enumerate_sigma(Natural n, Natural limit) {
    const std::uint64_t nn = n.value();
    const std::uint64_t up = limit.value();

    // Residues 1 <= m <= n coprime to n, each the head of one progression.
    // Heads beyond the limit can never contribute, so stop there.
    std::vector<std::uint64_t> residues;
    for (std::uint64_t m = 1; m <= std::min(nn, up); ++m)
        if (std::gcd(m, nn) == 1)
            residues.push_back(m);

    // The progressions share the common difference n, so walking them
    // block by block is their ascending merge. The smallest residue is
    // always 1, so once base + 1 passes the limit nothing remains.
    std::vector<Natural> out;
    for (std::uint64_t base = 0; base + 1 <= up; base += nn) {
        for (std::uint64_t m : residues) {
            const std::uint64_t x = base + m;
            if (x > up)
                break;
            out.push_back(Natural{x});
        }
    }

#ifndef NDEBUG
    {
        std::vector<Natural> filtered;
        for (std::uint64_t x = 1; x <= up; ++x)
            if (std::gcd(x, nn) == 1)
                filtered.push_back(Natural{x});
        assert(out == filtered);
    }
#endif
    return out;
}

ClosedMultiples closure_singleton(Natural n) {
    return ClosedMultiples{radical(n)};
}

ClosureProductCheck closure_product_check(Natural n, Natural m) {
    const ClosedMultiples lhs = closure_singleton(checked_mul(n, m));
    const Natural rhs = numtheory::lcm(radical(n).value(), radical(m).value());
    return ClosureProductCheck{lhs, rhs, lhs.modulus.value() == rhs};
}

ClosedMultiples complement_of_prime_sigma(Natural p) {
    if (!numtheory::is_prime(p))
        throw DomainError("complement_of_prime_sigma requires a prime");
    return ClosedMultiples{radical(p)};
}

Natural hyperconnected_witness(const FiniteUnionOpen& u, const FiniteUnionOpen& v) {
    if (u.empty() || v.empty())
        throw DomainError("hyperconnected_witness: empty union has no witness");
    // 1 is coprime to every key, so the scan stops immediately; kept as a
    // scan so the returned witness is the smallest by construction.
    for (std::uint64_t m = 1;; ++m) {
        const Natural candidate{m};
        if (u.contains(candidate) && v.contains(candidate))
            return candidate;
    }
}

Natural ultraconnected_witness(const ClosedMultiples& c, const ClosedMultiples& d) {
    const Natural w = numtheory::lcm(c.modulus.value(), d.modulus.value());
    assert(c.contains(w) && d.contains(w));
    return w;
}

namespace {

bool meets_sigma(const SetSpec& s, std::uint64_t r) {
    if (std::holds_alternative<AllNaturals>(s))
        return true; // 1 is in every sigma_r
    if (const auto* ex = std::get_if<ExplicitSet>(&s)) {
        for (const Natural& m : ex->elements)
            if (std::gcd(m.value(), r) == 1)
                return true;
        return false;
    }
    const auto& pu = std::get<PrimesUpTo>(s);
    for (std::uint64_t q = 2; q <= pu.bound.value(); ++q)
        if (numtheory::is_prime(Natural{q}) && r % q != 0)
            return true;
    return false;
}

} // namespace

DensityCertificate density_certificate(const SetSpec& s, Natural rad_bound) {
    for (std::uint64_t r = 1; r <= rad_bound.value(); ++r) {
        bool squarefree = true;
        for (const auto& pp : numtheory::factorize(Natural{r}).pairs)
            if (pp.exponent > 1) {
                squarefree = false;
                break;
            }
        if (!squarefree)
            continue;
        if (!meets_sigma(s, r))
            return DensityCertificate{false, Natural{r}};
    }
    return DensityCertificate{true, std::nullopt};
}

} // namespace macias::topo
