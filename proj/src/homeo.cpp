#include "macias/homeo.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace macias::homeo {

using numtheory::checked_mul;
using numtheory::checked_pow;
using numtheory::factorize;
using numtheory::is_prime;
using numtheory::prime_power_decompose;
using numtheory::radical;

FinSuppBijection FinSuppBijection::from_moves(std::map<Natural, Natural> moves) {
    std::set<Natural> values;
    for (const auto& [from, to] : moves) {
        if (!values.insert(to).second)
            throw SpecError("moves map repeats a value; not a bijection");
    }
    for (const auto& [from, to] : moves) {
        if (!values.contains(from))
            throw SpecError("moves map is not a permutation of its support");
    }
    std::erase_if(moves, [](const auto& kv) { return kv.first == kv.second; });
    FinSuppBijection h;
    h.moves_ = std::move(moves);
    return h;
}

FinSuppBijection FinSuppBijection::from_cycles(const std::vector<std::vector<Natural>>& cycles) {
    std::map<Natural, Natural> moves;
    std::set<Natural> seen;
    for (const auto& cycle : cycles) {
        if (cycle.size() < 2)
            throw SpecError("cycle needs at least two elements");
        for (const Natural& x : cycle) {
            if (!seen.insert(x).second)
                throw SpecError("duplicate element " + std::to_string(x.value()) +
                                " across cycles");
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            moves.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    return from_moves(std::move(moves));
}

std::vector<Natural> FinSuppBijection::support() const {
    std::vector<Natural> s;
    s.reserve(moves_.size());
    for (const auto& [from, to] : moves_)
        s.push_back(from);
    return s;
}

std::optional<Natural> FinSuppBijection::max_support() const {
    if (moves_.empty())
        return std::nullopt;
    return moves_.rbegin()->first;
}

std::vector<std::vector<Natural>> FinSuppBijection::cycles() const {
    std::vector<std::vector<Natural>> out;
    std::set<Natural> visited;
    for (const auto& [start, unused] : moves_) {
        if (visited.contains(start))
            continue;
        std::vector<Natural> cycle;
        Natural x = start;
        do {
            cycle.push_back(x);
            visited.insert(x);
            x = apply(x);
        } while (x != start);
        out.push_back(std::move(cycle));
    }
    // moves_ iterates ascending, so each cycle starts at its smallest
    // element and cycles come out ordered by first element.
    return out;
}

FinSuppBijection compose(const FinSuppBijection& g, const FinSuppBijection& h) {
    std::map<Natural, Natural> moves;
    for (const auto& [from, to] : h.moves())
        moves.emplace(from, g.apply(to));
    for (const auto& [from, to] : g.moves())
        moves.emplace(from, g.apply(h.apply(from)));
    return FinSuppBijection::from_moves(std::move(moves));
}

FinSuppBijection invert(const FinSuppBijection& h) {
    std::map<Natural, Natural> moves;
    for (const auto& [from, to] : h.moves())
        moves.emplace(to, from);
    return FinSuppBijection::from_moves(std::move(moves));
}

namespace {

bool is_power_of(Natural x, Natural p) {
    std::uint64_t v = x.value();
    if (v == 1)
        return false; // exponents start at 1
    while (v % p.value() == 0)
        v /= p.value();
    return v == 1;
}

} // namespace

FinSuppBijection synthesize(const PrimePowerPermSpec& spec) {
    std::set<Natural> primes_seen;
    std::vector<std::vector<Natural>> all_cycles;
    for (const auto& entry : spec.entries) {
        if (!is_prime(entry.prime))
            throw SpecError("entry base " + std::to_string(entry.prime.value()) +
                            " is not prime");
        if (!primes_seen.insert(entry.prime).second)
            throw SpecError("duplicate entry for prime " +
                            std::to_string(entry.prime.value()));
        for (const auto& cycle : entry.cycles) {
            for (const Natural& x : cycle) {
                if (!is_power_of(x, entry.prime))
                    throw SpecError("cycle element " + std::to_string(x.value()) +
                                    " is not a power of " +
                                    std::to_string(entry.prime.value()));
            }
            all_cycles.push_back(cycle);
        }
    }
    return FinSuppBijection::from_cycles(all_cycles);
}

VerificationReport decide_finitely_supported(const FinSuppBijection& h) {
    for (const auto& [n, image] : h.moves()) {
        const Natural rn = radical(n).value();
        const Natural rh = radical(image).value();
        if (rn != rh) {
            VerificationReport report;
            report.verdict = Verdict::NotHomeomorphism;
            report.witness = n;
            report.checks.push_back(
                {"radical-preservation", CheckStatus::Fail,
                 "radical(h(" + std::to_string(n.value()) + ")) = " +
                     std::to_string(rh.value()) + ", expected " +
                     std::to_string(rn.value())});
            return report;
        }
    }
    VerificationReport report;
    report.verdict = Verdict::Homeomorphism;
    report.checks.push_back({"radical-preservation", CheckStatus::Pass,
                             "radicals preserved on all " +
                                 std::to_string(h.moves().size()) +
                                 " moved points"});
    return report;
}

namespace {

struct CheckOutcome {
    bool pass = true;
    std::uint64_t witness = 0;
    std::string detail;
};

CheckOutcome check_fixes_one(const std::vector<std::uint64_t>& img) {
    if (img[1] != 1)
        return {false, 1, "h(1) = " + std::to_string(img[1])};
    return {true, 0, "h(1) = 1"};
}

// Prime powers up to w in ascending order.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t w) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= w; ++p) {
        if (!is_prime(Natural{p}))
            continue;
        for (std::uint64_t q = p; q <= w; q *= p) {
            out.push_back(q);
            if (q > w / p)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Partner prime of each prime p <= w: the base of h(p). Populated by
// check_prime_powers; consumed by check_prime_sets.
using PartnerMap = std::map<std::uint64_t, std::uint64_t>;

CheckOutcome check_prime_powers(const std::vector<std::uint64_t>& img, std::uint64_t w,
                                PartnerMap& partner) {
    std::map<std::uint64_t, std::uint64_t> partner_used_by; // partner prime -> p
    for (std::uint64_t q : prime_powers_up_to(w)) {
        const auto qpp = prime_power_decompose(Natural{q});
        const std::uint64_t p = qpp->prime.value();
        const auto image_pp = prime_power_decompose(Natural{img[q]});
        if (!image_pp)
            return {false, q,
                    "h(" + std::to_string(q) + ") = " + std::to_string(img[q]) +
                        " is not a prime power"};
        const std::uint64_t base = image_pp->prime.value();
        if (qpp->exponent == 1) {
            const auto [it, inserted] = partner_used_by.emplace(base, p);
            if (!inserted)
                return {false, q,
                        "primes " + std::to_string(it->second) + " and " +
                            std::to_string(p) + " share partner prime " +
                            std::to_string(base)};
            partner[p] = base;
        } else if (base != partner[p]) {
            return {false, q,
                    "h(" + std::to_string(q) + ") = " + std::to_string(img[q]) +
                        " has base " + std::to_string(base) + ", partner of " +
                        std::to_string(p) + " is " + std::to_string(partner[p])};
        }
    }
    return {true, 0, "all prime powers map to prime powers with one partner prime each"};
}

CheckOutcome check_prime_sets(const std::vector<std::uint64_t>& img, std::uint64_t w,
                              const PartnerMap& partner) {
    for (std::uint64_t n = 1; n <= w; ++n) {
        std::set<std::uint64_t> expected;
        bool partner_known = true;
        for (const auto& pp : factorize(Natural{n}).pairs) {
            const auto it = partner.find(pp.prime.value());
            if (it == partner.end()) {
                partner_known = false;
                break;
            }
            expected.insert(it->second);
        }
        std::set<std::uint64_t> actual;
        for (const auto& pp : factorize(Natural{img[n]}).pairs)
            actual.insert(pp.prime.value());
        if (!partner_known || expected != actual)
            return {false, n,
                    "primes dividing h(" + std::to_string(n) + ") = " +
                        std::to_string(img[n]) +
                        " do not match the partners of the primes dividing " +
                        std::to_string(n)};
    }
    return {true, 0, "prime divisor sets correspond through the partner map"};
}

CheckOutcome check_sigma_equivariance(const std::vector<std::uint64_t>& img,
                                      std::uint64_t w) {
    std::vector<std::uint8_t> in_image(w + 1);
    for (std::uint64_t k = 1; k <= w; ++k) {
        std::fill(in_image.begin(), in_image.end(), 0);
        for (std::uint64_t m = 1; m <= w; ++m)
            if (std::gcd(m, k) == 1)
                in_image[img[m]] = 1;
        const std::uint64_t hk = img[k];
        for (std::uint64_t x = 1; x <= w; ++x) {
            const bool expected = std::gcd(x, hk) == 1;
            if (in_image[x] != static_cast<std::uint8_t>(expected))
                return {false, x,
                        "image of sigma_" + std::to_string(k) +
                            " differs from sigma_" + std::to_string(hk) +
                            " at " + std::to_string(x)};
        }
    }
    return {true, 0, "sigma sets transport correctly for all k in the window"};
}

} // namespace

VerificationReport check_necessary_conditions(const FinSuppBijection& h, Natural window) {
    const auto top = h.max_support();
    if (top && top->value() > window.value())
        throw DomainError("support exceeds the verification window");

    const std::uint64_t w = window.value();
    std::vector<std::uint64_t> img(w + 1);
    for (std::uint64_t m = 1; m <= w; ++m)
        img[m] = h.apply(Natural{m}).value();

    PartnerMap partner;
    const CheckOutcome outcomes[] = {
        check_fixes_one(img),
        check_prime_powers(img, w, partner),
        check_prime_sets(img, w, partner),
        check_sigma_equivariance(img, w),
    };
    static const char* kNames[] = {"fixes-1", "prime-powers-to-prime-powers",
                                   "prime-set-correspondence",
                                   "sigma-equivariance-window"};

    VerificationReport report;
    report.verdict = Verdict::Inconclusive;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& oc = outcomes[i];
        report.checks.push_back(
            {kNames[i], oc.pass ? CheckStatus::Pass : CheckStatus::Fail, oc.detail});
        if (!oc.pass && report.verdict != Verdict::NotHomeomorphism) {
            report.verdict = Verdict::NotHomeomorphism;
            report.witness = Natural{oc.witness};
        }
    }
    return report;
}

std::vector<FinSuppBijection> nonrigidity_examples(std::uint64_t count) {
    if (count == 0)
        throw DomainError("nonrigidity_examples requires count >= 1");
    std::vector<FinSuppBijection> out;
    out.reserve(count);
    for (std::uint32_t exp = 1; out.size() < count; ++exp) {
        if (exp >= 63)
            throw DomainError("candidate prime powers exhausted");
        for (std::uint64_t c = 2; out.size() < count; ++c) {
            if (!is_prime(Natural{c}))
                continue;
            std::vector<Natural> cycle;
            try {
                cycle = {checked_pow(Natural{c}, exp), checked_pow(Natural{c}, exp + 1)};
            } catch (const DomainError&) {
                break; // larger primes overflow at this exponent too
            }
            FinSuppBijection h = FinSuppBijection::from_cycles({cycle});
            if (decide_finitely_supported(h).verdict != Verdict::Homeomorphism)
                continue;
            out.push_back(std::move(h));
        }
    }
    return out;
}

bool sigma_image_product_check(const FinSuppBijection& h, Natural n, Natural m,
                               Natural window) {
    const auto top = h.max_support();
    if (top && top->value() > window.value())
        throw DomainError("support exceeds the window");
    if (decide_finitely_supported(h).verdict != Verdict::Homeomorphism)
        throw DomainError("sigma_image_product_check requires a verified homeomorphism");

    const Natural product_image = h.apply(checked_mul(n, m));
    const Natural image_product = checked_mul(h.apply(n), h.apply(m));
    for (std::uint64_t x = 1; x <= window.value(); ++x) {
        const bool lhs = std::gcd(x, product_image.value()) == 1;
        const bool rhs = std::gcd(x, image_product.value()) == 1;
        if (lhs != rhs)
            return false;
    }
    return true;
}

Natural default_window(const FinSuppBijection& h) {
    const auto top = h.max_support();
    if (!top)
        return Natural{2};
    const std::uint64_t t = top->value();
    constexpr std::uint64_t kCap = 1'000'000;
    if (t >= 1'000)
        return Natural{kCap};
    return Natural{std::max<std::uint64_t>(t * t, 2)};
}

} // namespace macias::homeo
