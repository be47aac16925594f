#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macias/numtheory.hpp"

namespace macias::homeo {

using numtheory::Natural;

/// A self-bijection of the naturals moving only finitely many points,
/// stored as the map of its non-fixed points. The key set equals the
/// value set, so the map is a permutation of the support. The default
/// instance is the identity.
class FinSuppBijection {
public:
    FinSuppBijection() = default;

    /// Builds from a moves map; entries mapping a point to itself are
    /// dropped. Throws SpecError when the map is not a permutation of
    /// its support.
    static FinSuppBijection from_moves(std::map<Natural, Natural> moves);

    /// Builds from pairwise-disjoint cycles, each a list of at least
    /// two distinct naturals. Throws SpecError on violations.
    static FinSuppBijection from_cycles(const std::vector<std::vector<Natural>>& cycles);

    Natural apply(Natural n) const {
        const auto it = moves_.find(n);
        return it == moves_.end() ? n : it->second;
    }

    const std::map<Natural, Natural>& moves() const noexcept { return moves_; }
    bool is_identity() const noexcept { return moves_.empty(); }

    /// Support in ascending order (equals the image of the support).
    std::vector<Natural> support() const;

    /// Largest moved point; empty for the identity.
    std::optional<Natural> max_support() const;

    /// Canonical cycle decomposition: every cycle starts at its
    /// smallest element, cycles ordered by first element.
    std::vector<std::vector<Natural>> cycles() const;

    auto operator<=>(const FinSuppBijection&) const = default;

private:
    std::map<Natural, Natural> moves_;
};

/// apply(compose(g, h), n) = apply(g, apply(h, n)).
FinSuppBijection compose(const FinSuppBijection& g, const FinSuppBijection& h);

FinSuppBijection invert(const FinSuppBijection& h);

/// A permutation acting inside the powers of declared primes: for each
/// entry, every cycle element must be a power of that entry's prime.
struct PrimePowerPermSpec {
    struct Entry {
        Natural prime;
        std::vector<std::vector<Natural>> cycles;
    };
    std::vector<Entry> entries;
};

/// Realizes the description as a finitely supported bijection. The result
/// permutes prime powers within each prime's family and therefore
/// always verifies as a homeomorphism. Throws SpecError when a cycle
/// element is not a power of its declared prime or appears twice.
FinSuppBijection synthesize(const PrimePowerPermSpec& spec);

enum class Verdict { Homeomorphism, NotHomeomorphism, Inconclusive };
enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerificationReport {
    Verdict verdict;
    std::vector<CheckResult> checks;
    std::optional<Natural> witness;

    bool any_failed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail)
                return true;
        return false;
    }
};

/// Decides homeomorphism status for a finitely supported bijection:
/// h is a homeomorphism exactly when it preserves radicals on its
/// support. This reduction of the sigma-set criterion is validated
/// against the window oracle by the test suite rather than assumed;
/// see the project README for the argument sketch.
VerificationReport decide_finitely_supported(const FinSuppBijection& h);

/// Runs the four necessary conditions every homeomorphism satisfies,
/// restricted to [1, window]: fixes 1; maps prime powers to prime
/// powers with one partner prime per prime (injectively); maps the
/// primes dividing n onto the primes dividing h(n); and transports
/// sigma_k onto sigma_h(k) inside the window. Failure refutes with the
/// smallest witness; passing is Inconclusive since the conditions are
/// only necessary. The support must lie inside the window.
VerificationReport check_necessary_conditions(const FinSuppBijection& h, Natural window);

/// count pairwise-distinct non-identity homeomorphisms, built as
/// prime-power swaps p <-> p^2 over ascending primes (higher exponents
/// once primes whose square overflows are reached). Each result passes
/// decide_finitely_supported. count must be >= 1.
std::vector<FinSuppBijection> nonrigidity_examples(std::uint64_t count);

/// For a verified homeomorphism h, checks that sigma_h(n*m) and
/// sigma_h(n)*h(m) cut the same set out of [1, window]. Throws
/// DomainError when h is not a verified homeomorphism, a product
/// overflows, or the support exceeds the window.
bool sigma_image_product_check(const FinSuppBijection& h, Natural n, Natural m,
                               Natural window);

/// Default verification window: max(support u image)^2 capped at 10^6,
/// large enough to expose radical mismatches through small prime
/// multiples. Identity gets the minimum window 2.
Natural default_window(const FinSuppBijection& h);

} // namespace macias::homeo
