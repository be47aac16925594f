// Acceptance suite: one criterion per section, one pass/fail line each.
// Every bound and tolerance is pinned here; all comparisons are exact.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "macias/cli.hpp"
#include "macias/homeo.hpp"
#include "macias/oracle.hpp"
#include "macias/spec_io.hpp"
#include "macias/topo.hpp"

using namespace macias;
using namespace macias::numtheory;
using json = nlohmann::json;

namespace {

#ifndef MACIAS_FIXTURE_DIR
#error "MACIAS_FIXTURE_DIR must point at the fixtures directory"
#endif
const std::string kFixtures = MACIAS_FIXTURE_DIR;

struct Failure {
    std::string what;
};

using CheckFn = std::function<void(std::string& note)>;

void expect(bool ok, const std::string& what) {
    if (!ok)
        throw Failure{what};
}

// Dynamic split of [begin, end) across two workers; body must be pure.
void parallel_over(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk,
                   const std::function<void(std::uint64_t, std::uint64_t)>& body) {
    std::atomic<std::uint64_t> next{begin};
    std::atomic<bool> failed{false};
    std::string first_failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t lo = next.fetch_add(chunk);
            if (lo >= end || failed.load())
                return;
            const std::uint64_t hi = std::min(end, lo + chunk);
            try {
                body(lo, hi);
            } catch (const Failure& f) {
                std::scoped_lock lock(failure_mutex);
                if (!failed.exchange(true))
                    first_failure = f.what;
                return;
            }
        }
    };

    std::thread other(worker);
    worker();
    other.join();
    if (failed.load())
        throw Failure{first_failure};
}

homeo::FinSuppBijection swap_of(std::uint64_t a, std::uint64_t b) {
    return homeo::FinSuppBijection::from_cycles({{nat(a), nat(b)}});
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "macias");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

// ---------------------------------------------------------------- 1
void sigma_algebra_suite(std::string& note) {
    std::uint64_t pairs = 0;
    for (std::uint64_t n = 1; n <= 300; ++n)
        for (std::uint64_t m = 1; m <= 300; ++m) {
            const auto lhs = topo::basic_open(nat(n * m));
            const auto rhs = topo::intersect_basic(topo::basic_open(nat(n)),
                                                   topo::basic_open(nat(m)));
            expect(lhs == rhs, "sigma product/intersection mismatch at n=" +
                                   std::to_string(n) + " m=" + std::to_string(m));
            ++pairs;
        }

    for (std::uint64_t n = 1; n <= 100; ++n) {
        const auto merged = topo::enumerate_sigma(nat(n), nat(1000));
        std::vector<Natural> filtered;
        for (std::uint64_t x = 1; x <= 1000; ++x)
            if (std::gcd(x, n) == 1)
                filtered.push_back(nat(x));
        expect(merged == filtered,
               "progression merge disagrees with the gcd filter at n=" +
                   std::to_string(n));
    }
    note = std::to_string(pairs) + " product pairs, 100 enumerations, exact";
}

// ---------------------------------------------------------------- 2
void closure_suite(std::string& note) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto cl = topo::closure_singleton(nat(n));
        expect(cl.modulus == radical(nat(n)),
               "closure modulus is not the radical at n=" + std::to_string(n));

        std::uint64_t lpf = 1;
        for (const auto& pp : factorize(nat(n)).pairs)
            lpf = pp.prime.value();
        const auto scanned = oracle::window_closure(
            nat(n), oracle::Window{nat(1000)}, nat(std::max<std::uint64_t>(lpf, 1)));
        std::vector<Natural> expected;
        const std::uint64_t mod = cl.modulus.value().value();
        for (std::uint64_t x = mod; x <= 1000; x += mod)
            expected.push_back(nat(x));
        expect(scanned == expected,
               "definitional closure scan disagrees at n=" + std::to_string(n));
    }

    // radical(n*m) = lcm(rad n, rad m) for every unordered pair with
    // n*m <= 10^6; the two argument orders exercise the same identity.
    std::atomic<std::uint64_t> pairs{0};
    parallel_over(1, 1001, 8, [&pairs](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local = 0;
        for (std::uint64_t n = lo; n < hi; ++n)
            for (std::uint64_t m = n; n * m <= 1'000'000; ++m) {
                const auto r = topo::closure_product_check(nat(n), nat(m));
                expect(r.equal, "closure product check failed at n=" +
                                    std::to_string(n) + " m=" + std::to_string(m));
                ++local;
            }
        pairs.fetch_add(local);
    });
    note = "300 moduli vs oracle, " + std::to_string(pairs.load()) +
           " product pairs, exact";
}

// ---------------------------------------------------------------- 3
void complement_suite(std::string& note) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 2; p <= 100; ++p) {
        if (!is_prime(nat(p)))
            continue;
        const auto open = topo::basic_open(nat(p));
        const auto complement = topo::complement_of_prime_sigma(nat(p));
        for (std::uint64_t m = 1; m <= 1000; ++m) {
            const bool outside = !open.contains(nat(m));
            expect(outside == (m % p == 0), "complement mismatch at p=" +
                                                std::to_string(p) +
                                                " m=" + std::to_string(m));
            expect(complement.contains(nat(m)) == (m % p == 0),
                   "complement set mismatch at p=" + std::to_string(p));
        }
        ++count;
    }
    note = std::to_string(count) + " primes, window 1000, exact";
}

// ---------------------------------------------------------------- 4
void connectivity_suite(std::string& note) {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> element(1, 10'000);
    std::uniform_int_distribution<int> width(1, 3);
    for (int i = 0; i < 1000; ++i) {
        std::vector<topo::BasicOpen> us, vs;
        for (int j = width(rng); j > 0; --j)
            us.push_back(topo::basic_open(nat(element(rng))));
        for (int j = width(rng); j > 0; --j)
            vs.push_back(topo::basic_open(nat(element(rng))));
        const topo::FiniteUnionOpen u{us}, v{vs};
        expect(topo::hyperconnected_witness(u, v).value() == 1,
               "hyperconnected witness is not 1");

        const auto ca = topo::closure_singleton(nat(element(rng)));
        const auto cb = topo::closure_singleton(nat(element(rng)));
        const Natural w = topo::ultraconnected_witness(ca, cb);
        expect(w == numtheory::lcm(ca.modulus.value(), cb.modulus.value()),
               "ultraconnected witness is not the lcm");
        expect(ca.contains(w) && cb.contains(w),
               "ultraconnected witness not in both closed sets");
    }
    note = "1000 random pairs each, exact";
}

// ---------------------------------------------------------------- 5
void classical_fixture_suite(std::string& note) {
    const auto s24 = swap_of(2, 4);
    expect(homeo::decide_finitely_supported(s24).verdict ==
               homeo::Verdict::Homeomorphism,
           "swap 2<->4 must decide as a homeomorphism");
    expect(oracle::window_sigma_equivariance(s24, oracle::Window{nat(1000)}).pass,
           "swap 2<->4 must pass the oracle at window 1000");

    const auto s23 = swap_of(2, 3);
    const auto decided = homeo::decide_finitely_supported(s23);
    expect(decided.verdict == homeo::Verdict::NotHomeomorphism &&
               decided.witness && decided.witness->value() == 2,
           "swap 2<->3 must refute with witness 2");
    const auto scanned =
        oracle::window_sigma_equivariance(s23, oracle::Window{nat(100)});
    expect(!scanned.pass && scanned.witness, "oracle must refute swap 2<->3");
    expect(scanned.witness->second.value() == 4,
           "the oracle witness element must be 4");
    const auto failures =
        oracle::window_sigma_failures(s23, oracle::Window{nat(100)}, 100);
    bool has_k3_m4 = false;
    for (const auto& [k, m] : failures)
        has_k3_m4 |= (k.value() == 3 && m.value() == 4);
    expect(has_k3_m4, "failure set must contain the k=3, m=4 pattern");

    expect(run_cli({"check", kFixtures + "/swap24.json", "--window", "1000"}).code == 0,
           "CLI must exit 0 for swap 2<->4");
    expect(run_cli({"check", kFixtures + "/swap23.json", "--window", "100"}).code == 1,
           "CLI must exit 1 for swap 2<->3");
    note = "swap 2<->4 verified, swap 2<->3 refuted (m=4 witnessed), CLI exits 0/1";
}

// ---------------------------------------------------------------- 6
void nonrigidity_suite(std::string& note) {
    const auto r = run_cli({"nonrigid", "--count", "5", "--json"});
    expect(r.code == 0, "nonrigid must exit 0");
    const json doc = json::parse(r.out);
    expect(doc["bijections"].size() == 5, "nonrigid must emit 5 bijections");

    std::set<homeo::FinSuppBijection> distinct;
    for (const auto& b : doc["bijections"]) {
        const auto h = cli::to_bijection(cli::parse_spec_file(b.dump()));
        expect(!h.is_identity(), "nonrigidity example must move something");
        distinct.insert(h);
        const std::uint64_t top = h.max_support()->value();
        const auto oracle_result = oracle::window_sigma_equivariance(
            h, oracle::Window{nat(top * top)});
        expect(oracle_result.pass, "oracle must verify each nonrigidity example");
    }
    expect(distinct.size() == 5, "nonrigidity examples must be pairwise distinct");
    note = "5 distinct non-identity homeomorphisms, oracle-passed at max(support)^2";
}

// ---------------------------------------------------------------- 7
void derived_criterion_suite(std::string& note) {
    std::mt19937_64 rng(20250810);
    int homeo_count = 0, refuted_count = 0;

    auto agree = [&](const homeo::FinSuppBijection& h) {
        const bool decided = homeo::decide_finitely_supported(h).verdict ==
                             homeo::Verdict::Homeomorphism;
        const std::uint64_t top = h.max_support() ? h.max_support()->value() : 2;
        const std::uint64_t window =
            std::min<std::uint64_t>(std::max<std::uint64_t>(top * top, 2), 1'000'000);
        const bool scanned =
            oracle::window_sigma_equivariance(h, oracle::Window{nat(window)}).pass;
        expect(decided == scanned, "decision and oracle disagree");
        (decided ? homeo_count : refuted_count)++;
    };

    // Uniform random permutations of a small random subset of [1, 60];
    // virtually all of these break radical preservation.
    std::uniform_int_distribution<std::uint64_t> pick(1, 60);
    std::uniform_int_distribution<int> size_dist(2, 10);
    for (int trial = 0; trial < 415; ++trial) {
        std::set<std::uint64_t> chosen;
        const int target = size_dist(rng);
        while (static_cast<int>(chosen.size()) < target)
            chosen.insert(pick(rng));
        std::vector<std::uint64_t> points(chosen.begin(), chosen.end());
        std::vector<std::uint64_t> images = points;
        std::shuffle(images.begin(), images.end(), rng);
        std::map<Natural, Natural> moves;
        for (std::size_t i = 0; i < points.size(); ++i)
            moves.emplace(nat(points[i]), nat(images[i]));
        agree(homeo::FinSuppBijection::from_moves(moves));
    }

    // Permutations shuffled inside radical classes of [1, B]; these are
    // radical-preserving, so the oracle must confirm the Homeomorphism
    // verdict on the full window.
    auto class_shuffle = [&](std::uint64_t bound) {
        std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
        for (std::uint64_t x = 2; x <= bound; ++x)
            classes[radical(nat(x)).value().value()].push_back(x);
        std::map<Natural, Natural> moves;
        for (auto& [rad, members] : classes) {
            if (members.size() < 2)
                continue;
            std::vector<std::uint64_t> images = members;
            std::shuffle(images.begin(), images.end(), rng);
            for (std::size_t i = 0; i < members.size(); ++i)
                moves.emplace(nat(members[i]), nat(images[i]));
        }
        return homeo::FinSuppBijection::from_moves(moves);
    };
    for (int trial = 0; trial < 70; ++trial) {
        std::uniform_int_distribution<std::uint64_t> bound_dist(8, 32);
        agree(class_shuffle(bound_dist(rng)));
    }
    for (int trial = 0; trial < 15; ++trial)
        agree(class_shuffle(60));

    expect(homeo_count + refuted_count == 500, "exactly 500 permutations");
    expect(homeo_count >= 50, "the sample must include verified homeomorphisms");
    expect(refuted_count >= 300, "the sample must include refuted permutations");
    note = "500 permutations (" + std::to_string(homeo_count) + " verified, " +
           std::to_string(refuted_count) + " refuted), agreement 100%";
}

// ---------------------------------------------------------------- 8
void necessary_conditions_suite(std::string& note) {
    std::vector<homeo::FinSuppBijection> verified = homeo::nonrigidity_examples(5);
    verified.push_back(swap_of(2, 4));
    verified.push_back(homeo::FinSuppBijection::from_cycles(
        {{nat(2), nat(4), nat(16)}, {nat(3), nat(9)}}));

    for (const auto& h : verified) {
        expect(homeo::decide_finitely_supported(h).verdict ==
                   homeo::Verdict::Homeomorphism,
               "candidate must verify first");
        const auto report = homeo::check_necessary_conditions(h, nat(1000));
        expect(report.verdict == homeo::Verdict::Inconclusive,
               "necessary checks must pass for a verified homeomorphism");
        expect(report.checks.size() == 4, "all four checks must run");
        for (const auto& c : report.checks)
            expect(c.status == homeo::CheckStatus::Pass,
                   "check " + c.name + " must pass");
    }

    const auto moved_one = homeo::check_necessary_conditions(swap_of(1, 2), nat(100));
    expect(moved_one.verdict == homeo::Verdict::NotHomeomorphism,
           "moving 1 must refute");
    expect(moved_one.checks[0].name == "fixes-1" &&
               moved_one.checks[0].status == homeo::CheckStatus::Fail,
           "check 1 must fail for a bijection moving 1");
    expect(moved_one.witness && moved_one.witness->value() == 1,
           "witness must be 1");
    note = std::to_string(verified.size()) +
           " verified homeomorphisms pass all four checks; moving 1 fails "
           "check 1 with witness 1";
}

// ---------------------------------------------------------------- 9
void group_suite(std::string& note) {
    const auto examples = homeo::nonrigidity_examples(4);
    const homeo::FinSuppBijection id;

    for (const auto& g : examples)
        for (const auto& h : examples) {
            const auto gh = homeo::compose(g, h);
            expect(homeo::decide_finitely_supported(gh).verdict ==
                       homeo::Verdict::Homeomorphism,
                   "composition must re-verify");
        }
    for (const auto& h : examples) {
        expect(homeo::decide_finitely_supported(homeo::invert(h)).verdict ==
                   homeo::Verdict::Homeomorphism,
               "inverse must re-verify");
        expect(homeo::compose(h, homeo::invert(h)) == id, "h . h^-1 = id");
        expect(homeo::compose(homeo::invert(h), h) == id, "h^-1 . h = id");
        expect(homeo::compose(h, id) == h, "right identity law");
        expect(homeo::compose(id, h) == h, "left identity law");
        // the generated examples are transpositions, hence involutions
        expect(homeo::compose(h, h) == id, "involution squared is the identity");
        expect(homeo::invert(h) == h, "involution is its own inverse");
    }
    note = "closure under composition/inverse, identity and involution laws exact";
}

// ---------------------------------------------------------------- 10
void density_suite(std::string& note) {
    const topo::SetSpec one = topo::ExplicitSet::of({nat(1)});
    const auto c1 = topo::density_certificate(one, nat(1000));
    expect(c1.dense_up_to_bound, "the singleton 1 certifies dense at 10^3");

    const std::vector<std::pair<topo::SetSpec, std::uint64_t>> shared_prime = {
        {topo::ExplicitSet::of({nat(2), nat(4), nat(8)}), 2},
        {topo::ExplicitSet::of({nat(3), nat(9), nat(27)}), 3},
        {topo::ExplicitSet::of({nat(5), nat(25)}), 5},
        {topo::ExplicitSet::of({nat(7), nat(49), nat(343)}), 7},
        {topo::ExplicitSet::of({nat(11), nat(121)}), 11},
    };
    for (const auto& [set, prime] : shared_prime) {
        const auto cert = topo::density_certificate(set, nat(30));
        expect(!cert.dense_up_to_bound && cert.failure_witness &&
                   cert.failure_witness->value() == prime,
               "shared-prime set must fail with witness " + std::to_string(prime));
        const auto scan =
            oracle::window_density(set, oracle::Window{nat(1000)}, nat(30));
        expect(!scan.pass && scan.witness->value() == prime,
               "oracle must agree on witness " + std::to_string(prime));
    }

    const auto cp = topo::density_certificate(topo::PrimesUpTo{nat(100)}, nat(30));
    expect(cp.dense_up_to_bound, "primes up to 100 certify dense at rad bound 30");
    expect(oracle::window_density(topo::PrimesUpTo{nat(100)},
                                  oracle::Window{nat(1000)}, nat(30))
               .pass,
           "oracle agrees on the prime set");
    note = "singleton 1 at 10^3, five shared-prime refutations, primes-up-to-100 "
           "at 30, oracle-agreed";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        CheckFn fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "sigma-algebra", sigma_algebra_suite},
        {2, "closure", closure_suite},
        {3, "complement", complement_suite},
        {4, "connectivity", connectivity_suite},
        {5, "classical-fixtures", classical_fixture_suite},
        {6, "non-rigidity", nonrigidity_suite},
        {7, "derived-criterion", derived_criterion_suite},
        {8, "necessary-conditions", necessary_conditions_suite},
        {9, "group", group_suite},
        {10, "density", density_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        std::string why;
        try {
            c.fn(note);
        } catch (const Failure& f) {
            ok = false;
            why = f.what;
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("unexpected exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok) {
            std::printf("[PASS] %2d %-20s %s (%.2fs)\n", c.id, c.name, note.c_str(),
                        secs);
        } else {
            ++failures;
            std::printf("[FAIL] %2d %-20s %s (%.2fs)\n", c.id, c.name, why.c_str(),
                        secs);
        }
        std::fflush(stdout);
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
