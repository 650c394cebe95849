// Numeric evaluation of the asymptotic upper bounds and growth-ratio
// reports.  Everything here is double precision and feeds nothing back into
// the exact counting modules; limits are never asserted as equalities at
// finite v, only tracked as ratios.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tumap::asymptotics {

inline constexpr double kEulerGamma = 0.5772156649015329;

// e^gamma * v * ln ln v; domain v > e.
double gronwall_bound(double v);

// (e^gamma / 8) * v * ln ln (v/4); domain v/4 > e.
double bound27(double v);

// exp(ln 2 * ln v / ln ln v); domain v > e.
double divisor_bound(double v);

struct GrowthSample {
    uint64_t v = 0;
    uint64_t phi = 0;
    double bound = 0.0;
    double ratio = 0.0;
};

struct GrowthReport {
    int ell = 0;
    std::string bound_name;  // "gronwall", "gronwall27", "divisor", "divisor x2"
    std::vector<GrowthSample> samples;
    // type 27 only: smallest scanned v with Phi_27(v) > v, if any
    std::optional<uint64_t> v_with_phi_exceeding_v;
};

// Pairs Phi_ell(v) with its family's bound at each sample.  Samples must be
// strictly increasing multiples of v0(ell); samples below the bound's domain
// are skipped.
GrowthReport growth_report(int ell, const std::vector<uint64_t>& v_samples);

std::string to_csv(const GrowthReport& r);
std::string to_json(const GrowthReport& r);

}  // namespace tumap::asymptotics
