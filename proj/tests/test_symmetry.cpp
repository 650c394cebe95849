#include <doctest.h>

#include <algorithm>
#include <random>

#include "tumap/numtheory.hpp"
#include "tumap/symmetry.hpp"

using namespace tumap::symmetry;
using tumap::lattice::HnfMatrix;
using tumap::lattice::hnf_enumerate;
using tumap::tilings::spec;
namespace nt = tumap::numtheory;

TEST_CASE("isotropy pinned examples") {
    // identity sublattice: everything descends
    auto full = isotropy(spec(24), HnfMatrix{1, 0, 1});
    CHECK(full.order == 12);

    // spec(1) is rotation-only; at n=2 only the point reflection survives
    auto small = isotropy(spec(1), HnfMatrix{1, 0, 2});
    CHECK(small.order == 2);
    CHECK(small.contains("id"));
    CHECK(small.contains("tau"));

    // E27, a=1,b=1,d=2: the axis mirror passes since d | 2b
    auto e27 = isotropy(spec(27), HnfMatrix{1, 1, 2});
    CHECK(e27.contains("r1'"));

    // spec(1), a=1,b=1,d=3: the 60-degree rotation descends (Lemma conditions)
    auto rot = isotropy(spec(1), HnfMatrix{1, 1, 3});
    CHECK(rot.contains("rho60"));
    CHECK(rot.order == 6);
}

TEST_CASE("isotropy groups contain tau and have even order") {
    for (int ell = 1; ell <= 27; ++ell) {
        for (uint64_t n = 1; n <= 12; ++n) {
            for (const auto& M : hnf_enumerate(n)) {
                auto g = isotropy(spec(ell), M);
                CHECK(g.contains("id"));
                CHECK(g.contains("tau"));
                CHECK(g.order % 2 == 0);
                CHECK(spec(ell).symmetry_count() % g.order == 0);
            }
        }
    }
}

TEST_CASE("orbit pinned examples and orbit-stabilizer") {
    auto single = orbit_of_matrix(spec(24), HnfMatrix{1, 0, 1});
    CHECK(single.size() == 1);

    auto fixed = orbit_of_matrix(spec(1), HnfMatrix{1, 1, 3});
    CHECK(fixed.size() == 1);  // rho60 is in the isotropy, Z6 acts trivially

    for (int ell = 1; ell <= 27; ++ell) {
        const auto& sp = spec(ell);
        for (uint64_t n = 1; n <= 30; ++n) {
            for (const auto& M : hnf_enumerate(n)) {
                auto orbit = orbit_of_matrix(sp, M);
                auto iso = isotropy(sp, M);
                CHECK(orbit.size() * iso.order == sp.symmetry_count());
            }
        }
    }
}

TEST_CASE("classification pinned examples") {
    auto one = classify_up_to_iso(spec(5), {HnfMatrix{1, 2, 5}});
    CHECK(one.size() == 1);

    auto classes8 = classify_up_to_iso(spec(8), hnf_enumerate(2));
    CHECK(classes8.size() == 2);  // (sigma(2) + f3(2)) / 2

    auto trivial = classify_up_to_iso(spec(13), hnf_enumerate(1));
    CHECK(trivial.size() == 1);
}

TEST_CASE("classification is an equivalence relation on random samples") {
    std::mt19937 rng(11);
    for (int ell = 1; ell <= 27; ++ell) {
        const auto& sp = spec(ell);
        std::uniform_int_distribution<uint64_t> pick_n(1, 24);
        for (int trial = 0; trial < 12; ++trial) {
            uint64_t n = pick_n(rng);
            auto mats = hnf_enumerate(n);
            auto classes = classify_up_to_iso(sp, mats);
            // partition covers everything exactly once
            size_t total = 0;
            for (const auto& c : classes) total += c.members.size();
            CHECK(total == mats.size());
            // membership is symmetric/transitive: same canonical <=> same class
            for (const auto& c : classes) {
                for (const auto& m : c.members) {
                    auto orbit = orbit_of_matrix(sp, m);
                    CHECK(orbit.front() == c.canonical);
                    CHECK(std::find(orbit.begin(), orbit.end(), c.canonical) != orbit.end());
                }
            }
        }
    }
}

TEST_CASE("Burnside consistency: class multiplicities sum to sigma(n)") {
    for (int ell = 1; ell <= 27; ++ell) {
        const auto& sp = spec(ell);
        for (uint64_t n = 1; n <= 60; ++n) {
            auto classes = classify_up_to_iso(sp, hnf_enumerate(n));
            uint64_t total = 0;
            for (const auto& c : classes) {
                CHECK(sp.symmetry_count() % c.isotropy.order == 0);
                total += sp.symmetry_count() / c.isotropy.order;
            }
            CHECK(total == nt::sigma(n));
        }
    }
}
