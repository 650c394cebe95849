#include <doctest.h>

#include <cmath>
#include <vector>

#include "tumap/asymptotics.hpp"
#include "tumap/enumerate.hpp"
#include "tumap/numtheory.hpp"

using namespace tumap::asymptotics;
namespace en = tumap::enumeration;
namespace nt = tumap::numtheory;

namespace {

// sigma sieve for the scan tests
std::vector<uint64_t> sigma_sieve(uint64_t N) {
    std::vector<uint64_t> s(N + 1, 0);
    for (uint64_t d = 1; d <= N; ++d)
        for (uint64_t m = d; m <= N; m += d) s[m] += d;
    return s;
}

}  // namespace

TEST_CASE("bound domains and basic shape") {
    CHECK_THROWS_AS(gronwall_bound(2.0), std::domain_error);
    CHECK_THROWS_AS(gronwall_bound(std::exp(1.0)), std::domain_error);
    CHECK_THROWS_AS(bound27(4.0 * std::exp(1.0)), std::domain_error);
    CHECK_THROWS_AS(divisor_bound(2.0), std::domain_error);
    // e^gamma matches the standard constant to 10 digits
    CHECK(std::fabs(std::exp(kEulerGamma) - 1.78107241799) < 1e-9);
    // gronwall_bound is increasing on v >= 3
    double prev = gronwall_bound(3.0);
    for (double v = 3.5; v <= 200.0; v += 0.5) {
        double cur = gronwall_bound(v);
        CHECK(cur > prev);
        prev = cur;
    }
    // continuity by dense sampling: no jumps beyond float noise
    for (double v = 10.0; v < 20.0; v += 0.001) {
        CHECK(std::fabs(gronwall_bound(v + 0.001) - gronwall_bound(v)) < 0.02);
        CHECK(std::fabs(divisor_bound(v + 0.001) - divisor_bound(v)) < 0.05);
    }
    // divisor_bound eventually increasing
    prev = divisor_bound(20.0);
    for (double v = 21.0; v <= 2000.0; v += 1.0) {
        double cur = divisor_bound(v);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("Gronwall ratio scan for sigma") {
    const uint64_t N = 100000;
    auto sig = sigma_sieve(N);
    // the asymptotic bound only emerges past the small-v transient; the
    // worst ratios below 25 (14.2 at v=3, 2.56 at v=12, 2.16 at v=24) are
    // transient values, reported by the acceptance suite but not asserted
    double running_max = 0.0;
    uint64_t argmax = 0;
    for (uint64_t v = 25; v <= N; ++v) {
        double ratio = (double)sig[v] / ((double)v * std::log(std::log((double)v)));
        if (ratio > running_max) {
            running_max = ratio;
            argmax = v;
        }
    }
    CHECK(running_max <= 2.0);
    CHECK(argmax == 60);  // observed maximum 1.9863... at v = 60
    CHECK(running_max > 1.7810);  // consistent with e^gamma from below
}

TEST_CASE("divisor bound dominates tau with a computed slack factor") {
    // the exhaustive scan to 1e5 puts the worst ratio at 5.0569 (v = 55440,
    // tau = 120), so a slack factor of 4 is NOT enough at this scale; 6 is
    const uint64_t N = 100000;
    std::vector<uint32_t> tau(N + 1, 0);
    for (uint64_t d = 1; d <= N; ++d)
        for (uint64_t m = d; m <= N; m += d) ++tau[m];
    double worst = 0.0;
    for (uint64_t v = 3; v <= N; ++v) {
        double r = (double)tau[v] / divisor_bound((double)v);
        worst = std::max(worst, r);
        CHECK(r <= 6.0);
    }
    CHECK(worst > 5.05);
    CHECK(worst < 5.06);
    // Phi_21(v) = f3 - f5 <= 2 tau, so twice the slack covers it
    for (uint64_t v = 6; v <= N; v += 6) {
        if (v / 6 <= 2) continue;
        CHECK((double)en::phi_closed(21, v) <= 12.0 * divisor_bound((double)(v / 6)));
    }
}

TEST_CASE("divisor-family counts stay under tau / 2 tau exactly") {
    // the f1/f2/f5/f6 types are bounded by tau; the f3-based types (19, 21,
    // 22, 24) are NOT -- f3(8) = 5 > tau(8) = 4, in fact the published Table
    // itself has Phi_19(40) = 5 -- but they do satisfy the 2 tau envelope,
    // like the g-family
    for (int ell : {1, 2, 5, 6, 7, 9, 11, 14, 16, 17, 20, 26}) {
        uint64_t v0 = en::v0_of(ell);
        for (uint64_t v = v0; v <= 10000; v += v0)
            CHECK(en::phi_closed(ell, v) <= nt::tau(v / v0));
    }
    for (int ell : {10, 18, 19, 21, 22, 24}) {
        uint64_t v0 = en::v0_of(ell);
        for (uint64_t v = v0; v <= 10000; v += v0)
            CHECK(en::phi_closed(ell, v) <= 2 * nt::tau(v / v0));
    }
    // the sharp counterexample to the published "f_i <= tau for all i"
    CHECK(nt::f3(8) == 5);
    CHECK(nt::tau(8) == 4);
}

TEST_CASE("oracle-confirmed Phi_27 stays within the published bound envelope") {
    // ratio <= 1.5 past the tiny-v transient (3.98 at v=12, 1.72 at v=16)
    for (uint64_t v = 20; v <= 40000; v += 4)
        CHECK((double)en::phi_closed(27, v) / bound27((double)v) <= 1.5);
}

TEST_CASE("growth reports") {
    std::vector<uint64_t> samples;
    for (uint64_t v = 4; v <= 400; v += 4) samples.push_back(v);
    auto r27 = growth_report(27, samples);
    CHECK(r27.bound_name == "gronwall27");
    CHECK(!r27.samples.empty());
    for (const auto& s : r27.samples) {
        CHECK(s.ratio >= 0.0);
        CHECK(std::isfinite(s.ratio));
    }
    // no v with Phi_27(v) > v in this small window
    CHECK_FALSE(r27.v_with_phi_exceeding_v.has_value());

    std::vector<uint64_t> s25;
    for (uint64_t v = 6; v <= 600; v += 6) s25.push_back(v);
    auto r25 = growth_report(25, s25);
    for (const auto& s : r25.samples) CHECK(s.phi == 0);

    std::vector<uint64_t> s1;
    for (uint64_t v = 12; v <= 1200; v += 12) s1.push_back(v);
    auto r1 = growth_report(1, s1);
    CHECK(r1.bound_name == "divisor");
    for (const auto& s : r1.samples) CHECK(s.phi <= nt::tau(s.v / 12));

    CHECK_THROWS_AS(growth_report(1, {12, 13}), std::domain_error);
    CHECK_THROWS_AS(growth_report(1, {24, 12}), std::domain_error);

    auto csv = to_csv(r1);
    CHECK(csv.substr(0, 17) == "v,phi,bound,ratio");
    auto j = to_json(r27);
    CHECK(j.find("\"bound\": \"gronwall27\"") != std::string::npos);
}
