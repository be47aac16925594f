#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "macias/oracle.hpp"

using namespace macias;
using namespace macias::numtheory;
using namespace macias::homeo;
using namespace macias::oracle;

namespace {

FinSuppBijection swap_of(std::uint64_t a, std::uint64_t b) {
    return FinSuppBijection::from_cycles({{nat(a), nat(b)}});
}

} // namespace

TEST_CASE("Window validates its bound") {
    CHECK_THROWS_AS(Window{nat(1)}, DomainError);
    CHECK_NOTHROW(Window{nat(2)});
}

TEST_CASE("sigma equivariance passes for the swap of 2 and 4") {
    const auto r = window_sigma_equivariance(swap_of(2, 4), Window{nat(1000)});
    CHECK(r.pass);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("sigma equivariance passes for the identity") {
    const auto r = window_sigma_equivariance(FinSuppBijection{}, Window{nat(100)});
    CHECK(r.pass);
}

TEST_CASE("sigma equivariance refutes the swap of 2 and 3") {
    const auto r = window_sigma_equivariance(swap_of(2, 3), Window{nat(100)});
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.witness.has_value());

    // Lexicographically minimal failure: already at k = 2 the image of
    // sigma_2 misses 4 while sigma_h(2) = sigma_3 contains it.
    CHECK(r.witness->first.value() == 2);
    CHECK(r.witness->second.value() == 4);

    // The failure set also contains the classical pattern at k = 3:
    // 4 stays fixed, lands in the image of sigma_3, but is not coprime
    // to h(3) = 2.
    const auto failures = window_sigma_failures(swap_of(2, 3), Window{nat(100)}, 50);
    bool found_k3_m4 = false;
    for (const auto& [k, m] : failures)
        if (k.value() == 3 && m.value() == 4)
            found_k3_m4 = true;
    CHECK(found_k3_m4);
}

TEST_CASE("sigma equivariance rejects support outside the window") {
    CHECK_THROWS_AS(window_sigma_equivariance(swap_of(2, 500), Window{nat(100)}),
                    DomainError);
}

TEST_CASE("a synthesized prime-power family passes at window 2000") {
    PrimePowerPermSpec spec;
    spec.entries.push_back({nat(2), {{nat(2), nat(4), nat(16)}}});
    spec.entries.push_back({nat(3), {{nat(3), nat(9)}}});
    const auto h = synthesize(spec);
    CHECK(window_sigma_equivariance(h, Window{nat(2000)}).pass);
}

TEST_CASE("sharded and serial scans agree") {
    // 4096 crosses the internal threading threshold; the witness must
    // be identical either way.
    const auto big = window_sigma_equivariance(swap_of(2, 3), Window{nat(4200)});
    REQUIRE_FALSE(big.pass);
    CHECK(big.witness->first.value() == 2);
    CHECK(big.witness->second.value() == 4);

    const auto pass = window_sigma_equivariance(swap_of(2, 4), Window{nat(4200)});
    CHECK(pass.pass);
}

TEST_CASE("window_closure examples") {
    const auto c12 = window_closure(nat(12), Window{nat(60)}, nat(12));
    std::vector<std::uint64_t> got;
    for (const auto& x : c12)
        got.push_back(x.value());
    CHECK(got == std::vector<std::uint64_t>{6, 12, 18, 24, 30, 36, 42, 48, 54, 60});

    const auto c1 = window_closure(nat(1), Window{nat(10)}, nat(10));
    CHECK(c1.size() == 10); // the whole window

    const auto c7 = window_closure(nat(7), Window{nat(30)}, nat(7));
    got.clear();
    for (const auto& x : c7)
        got.push_back(x.value());
    CHECK(got == std::vector<std::uint64_t>{7, 14, 21, 28});
}

TEST_CASE("window_closure enforces the exactness precondition") {
    CHECK_THROWS_AS(window_closure(nat(14), Window{nat(100)}, nat(6)), DomainError);
    CHECK_NOTHROW(window_closure(nat(14), Window{nat(100)}, nat(7)));
}

TEST_CASE("window_density examples") {
    const topo::SetSpec one = topo::ExplicitSet::of({nat(1)});
    CHECK(window_density(one, Window{nat(100)}, nat(50)).pass);

    const topo::SetSpec powers = topo::ExplicitSet::of({nat(2), nat(4), nat(8)});
    const auto r = window_density(powers, Window{nat(100)}, nat(10));
    REQUIRE_FALSE(r.pass);
    CHECK(r.witness->value() == 2);

    const topo::SetSpec primes = topo::PrimesUpTo{nat(50)};
    CHECK(window_density(primes, Window{nat(100)}, nat(30)).pass);

    CHECK_THROWS_AS(window_density(one, Window{nat(10)}, nat(50)), DomainError);
}

TEST_CASE("window_density agrees with the certificate") {
    using topo::density_certificate;
    const std::vector<topo::SetSpec> specs = {
        topo::ExplicitSet::of({nat(1)}),
        topo::ExplicitSet::of({nat(2), nat(3)}),
        topo::ExplicitSet::of({nat(2), nat(4), nat(8)}),
        topo::ExplicitSet::of({nat(6), nat(10), nat(15)}),
        topo::ExplicitSet::of({nat(7), nat(11), nat(13)}),
        topo::PrimesUpTo{nat(100)},
        topo::AllNaturals{},
    };
    for (const auto& s : specs) {
        const auto cert = density_certificate(s, nat(30));
        const auto scan = window_density(s, Window{nat(1000)}, nat(30));
        CHECK(cert.dense_up_to_bound == scan.pass);
        if (!cert.dense_up_to_bound)
            CHECK(cert.failure_witness->value() == scan.witness->value());
    }
}
