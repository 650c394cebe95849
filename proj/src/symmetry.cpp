#include "tumap/symmetry.hpp"

#include <algorithm>
#include <map>

namespace tumap::symmetry {

using lattice::HnfMatrix;
using lattice::IntMatrix2;

IsotropyGroup isotropy(const tilings::TilingSpec& spec, const HnfMatrix& M) {
    IsotropyGroup g;
    for (const auto& s : spec.symmetries)
        if (lattice::conjugation_integral(s.linear, M)) g.labels.push_back(s.label);
    g.order = g.labels.size();
    return g;
}

std::vector<HnfMatrix> orbit_of_matrix(const tilings::TilingSpec& spec, const HnfMatrix& M) {
    std::vector<HnfMatrix> orbit;
    for (const auto& s : spec.symmetries) {
        HnfMatrix h = lattice::hnf_reduce(s.linear * M.matrix());
        if (std::find(orbit.begin(), orbit.end(), h) == orbit.end()) orbit.push_back(h);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<IsoClass> classify_up_to_iso(const tilings::TilingSpec& spec,
                                         const std::vector<HnfMatrix>& mats) {
    std::vector<IsoClass> classes;
    std::map<HnfMatrix, size_t> canonical_of;  // canonical rep -> class index
    for (const auto& M : mats) {
        auto orbit = orbit_of_matrix(spec, M);
        const HnfMatrix& canon = orbit.front();  // least (d, b, a)
        auto it = canonical_of.find(canon);
        if (it == canonical_of.end()) {
            IsoClass cls;
            cls.canonical = canon;
            cls.members.push_back(M);
            cls.isotropy = isotropy(spec, canon);
            canonical_of[canon] = classes.size();
            classes.push_back(std::move(cls));
        } else {
            classes[it->second].members.push_back(M);
        }
    }
    return classes;
}

}  // namespace tumap::symmetry
