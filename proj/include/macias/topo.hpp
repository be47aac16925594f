#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "macias/numtheory.hpp"

namespace macias::topo {

using numtheory::Natural;
using numtheory::Radical;

/// The basic open set sigma_key = {m : gcd(key, m) = 1}, stored by its
/// squarefree key. sigma_n collapses to sigma_radical(n), so equal keys
/// mean equal sets. Key 1 is the whole space.
struct BasicOpen {
    Radical key;

    bool contains(Natural m) const {
        return numtheory::gcd(m, key.value()).value() == 1;
    }

    auto operator<=>(const BasicOpen&) const = default;
};

/// The closed set modulus * N of all multiples of a squarefree modulus.
/// Modulus 1 is the whole space.
struct ClosedMultiples {
    Radical modulus;

    bool contains(Natural m) const {
        return m.value() % modulus.value().value() == 0;
    }

    auto operator<=>(const ClosedMultiples&) const = default;
};

/// A finite union of basic opens; parts deduplicated and sorted by key.
/// No parts represents the empty set.
class FiniteUnionOpen {
public:
    FiniteUnionOpen() = default;
    explicit FiniteUnionOpen(std::vector<BasicOpen> parts);

    const std::vector<BasicOpen>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    bool contains(Natural m) const {
        for (const auto& p : parts_)
            if (p.contains(m))
                return true;
        return false;
    }

private:
    std::vector<BasicOpen> parts_;
};

/// Ascending duplicate-free list of members.
struct ExplicitSet {
    std::vector<Natural> elements;

    static ExplicitSet of(std::vector<Natural> elements);
};

/// The set of primes not exceeding bound.
struct PrimesUpTo {
    Natural bound;
};

struct AllNaturals {};

/// Input language for density checks.
using SetSpec = std::variant<ExplicitSet, PrimesUpTo, AllNaturals>;

BasicOpen basic_open(Natural n);

/// sigma_a intersected with sigma_b is the basic open keyed by
/// radical(a.key * b.key). Throws DomainError if the key product
/// overflows.
BasicOpen intersect_basic(const BasicOpen& a, const BasicOpen& b);

/// Members of sigma_n up to limit, produced by merging the arithmetic
/// progressions n*(N u {0}) + m over residues m coprime to n. Agrees
/// with the direct gcd filter (asserted in debug builds).
std::vector<Natural> enumerate_sigma(Natural n, Natural limit);

/// Closure of {n}: the multiples of radical(n). n = 1 gives the whole
/// space.
ClosedMultiples closure_singleton(Natural n);

struct ClosureProductCheck {
    ClosedMultiples lhs;
    Natural rhs_modulus;
    bool equal;
};

/// Compares the closure of {n*m} against the intersection of the
/// closures of {n} and {m}, i.e. radical(n*m) vs lcm(rad n, rad m).
/// equal is always true; the check exists so the identity can be
/// exercised on demand.
ClosureProductCheck closure_product_check(Natural n, Natural m);

/// For prime p the complement of sigma_p is exactly p * N. Throws
/// DomainError if p is not prime.
ClosedMultiples complement_of_prime_sigma(Natural p);

/// Smallest natural in both unions; 1 unless a union is empty, which is
/// a precondition violation.
Natural hyperconnected_witness(const FiniteUnionOpen& u, const FiniteUnionOpen& v);

/// Smallest common element of two closed multiple sets: the lcm of the
/// moduli.
Natural ultraconnected_witness(const ClosedMultiples& c, const ClosedMultiples& d);

struct DensityCertificate {
    bool dense_up_to_bound;
    std::optional<Natural> failure_witness;
};

/// Checks that s meets sigma_r for every squarefree r <= rad_bound.
/// A bounded certificate, not a proof of density; the first failing r
/// is reported.
DensityCertificate density_certificate(const SetSpec& s, Natural rad_bound);

} // namespace macias::topo
