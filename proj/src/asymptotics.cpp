#include "tumap/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "tumap/enumerate.hpp"

namespace tumap::asymptotics {

namespace {
const double kE = std::exp(1.0);
}

double gronwall_bound(double v) {
    if (!(v > kE)) throw std::domain_error("gronwall_bound: requires v > e");
    return std::exp(kEulerGamma) * v * std::log(std::log(v));
}

double bound27(double v) {
    if (!(v / 4.0 > kE)) throw std::domain_error("bound27: requires v/4 > e");
    return std::exp(kEulerGamma) / 8.0 * v * std::log(std::log(v / 4.0));
}

double divisor_bound(double v) {
    if (!(v > kE)) throw std::domain_error("divisor_bound: requires v > e");
    return std::exp(std::log(2.0) * std::log(v) / std::log(std::log(v)));
}

GrowthReport growth_report(int ell, const std::vector<uint64_t>& v_samples) {
    namespace en = tumap::enumeration;
    GrowthReport rep;
    rep.ell = ell;
    uint64_t v0 = en::v0_of(ell);

    bool gronwall_family = false, glide_family = false;
    switch (ell) {
        case 3: case 4: case 8: case 12: case 13: case 15: case 23: case 27:
            gronwall_family = true;
            break;
        case 9: case 10: case 18:
            glide_family = true;
            break;
        default:
            break;
    }
    rep.bound_name = ell == 27 ? "gronwall27"
                     : gronwall_family ? "gronwall"
                     : glide_family    ? "divisor x2"
                                       : "divisor";

    uint64_t prev = 0;
    for (uint64_t v : v_samples) {
        if (v % v0)
            throw std::domain_error("growth_report: sample " + std::to_string(v) +
                                    " is not a multiple of v0");
        if (v <= prev) throw std::domain_error("growth_report: samples must increase");
        prev = v;
        uint64_t phi = en::phi_closed(ell, v);
        double n = (double)v / (double)v0;
        double bound;
        if (ell == 27) {
            if (!(v / 4.0 > kE)) continue;
            bound = bound27((double)v);
        } else if (gronwall_family) {
            if (!(n > kE)) continue;
            // Phi is (sigma + smaller)/2 in this family, (sigma - ...)/4 for 23
            double coef = (ell == 23) ? 0.25 : 0.5;
            bound = coef * std::exp(kEulerGamma) * n * std::log(std::log(n));
        } else {
            if (!(n > kE)) continue;
            bound = divisor_bound(n) * (glide_family ? 2.0 : 1.0);
        }
        GrowthSample s;
        s.v = v;
        s.phi = phi;
        s.bound = bound;
        s.ratio = bound > 0 ? (double)phi / bound : 0.0;
        rep.samples.push_back(s);
    }

    if (ell == 27) {
        for (const auto& s : rep.samples)
            if (s.phi > s.v) {
                rep.v_with_phi_exceeding_v = s.v;
                break;
            }
    }
    return rep;
}

std::string to_csv(const GrowthReport& r) {
    std::string out = "v,phi,bound,ratio\n";
    char buf[128];
    for (const auto& s : r.samples) {
        snprintf(buf, sizeof buf, "%llu,%llu,%.9g,%.9g\n", (unsigned long long)s.v,
                 (unsigned long long)s.phi, s.bound, s.ratio);
        out += buf;
    }
    return out;
}

std::string to_json(const GrowthReport& r) {
    nlohmann::json j;
    j["type"] = r.ell;
    j["bound"] = r.bound_name;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : r.samples)
        j["samples"].push_back(
            {{"v", s.v}, {"phi", s.phi}, {"bound", s.bound}, {"ratio", s.ratio}});
    if (r.v_with_phi_exceeding_v)
        j["v_with_phi_exceeding_v"] = *r.v_with_phi_exceeding_v;
    else if (r.ell == 27)
        j["v_with_phi_exceeding_v"] = nullptr;
    return j.dump(2);
}

}  // namespace tumap::asymptotics
