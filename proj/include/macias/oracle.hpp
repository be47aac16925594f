#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "macias/homeo.hpp"
#include "macias/topo.hpp"

namespace macias::oracle {

using numtheory::Natural;

/// The interval [1, upper], upper >= 2.
class Window {
public:
    explicit Window(Natural upper) : upper_(upper) {
        if (upper.value() < 2)
            throw DomainError("Window upper bound must be >= 2");
    }

    Natural upper() const noexcept { return upper_; }

private:
    Natural upper_;
};

struct SigmaEquivarianceResult {
    bool pass;
    /// First failure: smallest k whose sigma set is not transported
    /// onto sigma_h(k) inside the window, then the smallest element of
    /// the symmetric difference.
    std::optional<std::pair<Natural, Natural>> witness;
};

/// Definitional check that h carries sigma_k onto sigma_h(k) inside the
/// window, for every k up to the window bound. Evaluates gcds and
/// h directly; never consults the symbolic modules. The support of h
/// must lie inside the window. Large windows shard the k-range across
/// threads; the reported witness is the minimal one regardless.
SigmaEquivarianceResult window_sigma_equivariance(const homeo::FinSuppBijection& h,
                                                  Window w);

/// All failing (k, m) pairs of the same check, in lexicographic order,
/// up to max_failures. Useful for inspecting a refutation beyond the
/// minimal witness.
std::vector<std::pair<Natural, Natural>>
window_sigma_failures(const homeo::FinSuppBijection& h, Window w,
                      std::size_t max_failures);

/// Definitional closure of {n} cut to the window: the m <= upper such
/// that every k <= k_bound coprime to m is coprime to n. k_bound must
/// reach the largest prime factor of n, which makes the result exactly
/// the window multiples of the squarefree kernel of n.
std::vector<Natural> window_closure(Natural n, Window w, Natural k_bound);

struct DensityResult {
    bool pass;
    std::optional<Natural> witness;
};

/// Exhaustive re-check of the density certificate: for every squarefree
/// r <= rad_bound, scans the window for a member of s coprime to r.
/// rad_bound must not exceed the window bound.
DensityResult window_density(const topo::SetSpec& s, Window w, Natural rad_bound);

} // namespace macias::oracle
