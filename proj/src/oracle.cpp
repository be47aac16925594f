#include "macias/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

// Everything here recomputes from the definitions: gcd, divisibility and
// h itself. No radicals, closures or basic opens from the symbolic
// modules; their identities are what these scans are ground truth for.

namespace macias::oracle {

namespace {

std::uint64_t local_largest_prime_factor(std::uint64_t n) {
    std::uint64_t largest = 1;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        while (n % d == 0) {
            largest = d;
            n /= d;
        }
    }
    return n > 1 ? n : largest;
}

bool local_is_squarefree(std::uint64_t n) {
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return false;
        }
    }
    return true;
}

bool local_is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Smallest element of the symmetric difference between the image of
// sigma_k and sigma_img[k], both cut to [1, w]; 0 when the sets agree.
std::uint64_t sigma_mismatch_at(const std::vector<std::uint64_t>& img, std::uint64_t w,
                                std::uint64_t k, std::vector<std::uint8_t>& in_image) {
    std::fill(in_image.begin(), in_image.end(), 0);
    for (std::uint64_t m = 1; m <= w; ++m)
        if (std::gcd(m, k) == 1)
            in_image[img[m]] = 1;
    const std::uint64_t hk = img[k];
    for (std::uint64_t x = 1; x <= w; ++x) {
        const bool expected = std::gcd(x, hk) == 1;
        if (in_image[x] != static_cast<std::uint8_t>(expected))
            return x;
    }
    return 0;
}

std::vector<std::uint64_t> image_table(const homeo::FinSuppBijection& h,
                                       std::uint64_t w) {
    const auto top = h.max_support();
    if (top && top->value() > w)
        throw DomainError("support of h exceeds the window");
    std::vector<std::uint64_t> img(w + 1);
    for (std::uint64_t m = 1; m <= w; ++m)
        img[m] = h.apply(Natural{m}).value();
    return img;
}

} // namespace

SigmaEquivarianceResult window_sigma_equivariance(const homeo::FinSuppBijection& h,
                                                  Window w) {
    const std::uint64_t upper = w.upper().value();
    const std::vector<std::uint64_t> img = image_table(h, upper);

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers =
        upper >= 1024 ? std::max(1u, std::min(hw, 8u)) : 1u;

    // Each worker takes an interleaved slice of the k-range and keeps its
    // own best (smallest-k) failure; a shared bound prunes k past the
    // best failure seen anywhere. Merging the per-worker minima yields
    // the global lexicographic minimum independent of scheduling.
    std::atomic<std::uint64_t> best_k{upper + 1};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found(
        workers, {upper + 1, 0});

    auto scan = [&](unsigned worker) {
        std::vector<std::uint8_t> in_image(upper + 1);
        for (std::uint64_t k = 1 + worker; k <= upper; k += workers) {
            if (k >= best_k.load(std::memory_order_relaxed))
                break;
            const std::uint64_t x = sigma_mismatch_at(img, upper, k, in_image);
            if (x != 0) {
                found[worker] = {k, x};
                std::uint64_t seen = best_k.load(std::memory_order_relaxed);
                while (k < seen &&
                       !best_k.compare_exchange_weak(seen, k, std::memory_order_relaxed))
                    ;
                break;
            }
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(scan, t);
        for (auto& th : pool)
            th.join();
    }

    const auto it = std::min_element(found.begin(), found.end());
    if (it->first > upper)
        return {true, std::nullopt};
    return {false, std::make_pair(Natural{it->first}, Natural{it->second})};
}

std::vector<std::pair<Natural, Natural>>
window_sigma_failures(const homeo::FinSuppBijection& h, Window w,
                      std::size_t max_failures) {
    const std::uint64_t upper = w.upper().value();
    const std::vector<std::uint64_t> img = image_table(h, upper);

    std::vector<std::pair<Natural, Natural>> failures;
    std::vector<std::uint8_t> in_image(upper + 1);
    for (std::uint64_t k = 1; k <= upper && failures.size() < max_failures; ++k) {
        std::fill(in_image.begin(), in_image.end(), 0);
        for (std::uint64_t m = 1; m <= upper; ++m)
            if (std::gcd(m, k) == 1)
                in_image[img[m]] = 1;
        const std::uint64_t hk = img[k];
        for (std::uint64_t x = 1; x <= upper && failures.size() < max_failures; ++x) {
            const bool expected = std::gcd(x, hk) == 1;
            if (in_image[x] != static_cast<std::uint8_t>(expected))
                failures.emplace_back(Natural{k}, Natural{x});
        }
    }
    return failures;
}

std::vector<Natural> window_closure(Natural n, Window w, Natural k_bound) {
    if (k_bound.value() < local_largest_prime_factor(n.value()))
        throw DomainError("k_bound below the largest prime factor of n");

    const std::uint64_t upper = w.upper().value();
    const std::uint64_t kb = k_bound.value();
    std::vector<Natural> out;
    for (std::uint64_t m = 1; m <= upper; ++m) {
        bool in_closure = true;
        for (std::uint64_t k = 1; k <= kb; ++k) {
            if (std::gcd(k, m) == 1 && std::gcd(k, n.value()) != 1) {
                in_closure = false;
                break;
            }
        }
        if (in_closure)
            out.push_back(Natural{m});
    }
    return out;
}

DensityResult window_density(const topo::SetSpec& s, Window w, Natural rad_bound) {
    if (rad_bound.value() > w.upper().value())
        throw DomainError("rad_bound exceeds the window");

    const std::uint64_t upper = w.upper().value();
    auto members_meet = [&](std::uint64_t r) {
        if (std::holds_alternative<topo::AllNaturals>(s)) {
            for (std::uint64_t m = 1; m <= upper; ++m)
                if (std::gcd(m, r) == 1)
                    return true;
            return false;
        }
        if (const auto* ex = std::get_if<topo::ExplicitSet>(&s)) {
            for (const Natural& m : ex->elements)
                if (m.value() <= upper && std::gcd(m.value(), r) == 1)
                    return true;
            return false;
        }
        const auto& pu = std::get<topo::PrimesUpTo>(s);
        const std::uint64_t bound = std::min(pu.bound.value(), upper);
        for (std::uint64_t q = 2; q <= bound; ++q)
            if (local_is_prime(q) && std::gcd(q, r) == 1)
                return true;
        return false;
    };

    for (std::uint64_t r = 1; r <= rad_bound.value(); ++r) {
        if (!local_is_squarefree(r))
            continue;
        if (!members_meet(r))
            return {false, Natural{r}};
    }
    return {true, std::nullopt};
}

} // namespace macias::oracle
