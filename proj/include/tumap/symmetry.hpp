// Isotropy groups of covers and classification of covers up to isomorphism
// under a tiling's symmetry list (the A M B criterion: two sublattices give
// isomorphic maps iff some symmetry's linear part carries one onto the other).
#pragma once

#include <string>
#include <vector>

#include "tumap/intmat.hpp"
#include "tumap/tiling.hpp"

namespace tumap::symmetry {

struct IsotropyGroup {
    std::vector<std::string> labels;  // members, in spec symmetry order
    size_t order = 0;

    bool contains(const std::string& label) const {
        for (const auto& l : labels)
            if (l == label) return true;
        return false;
    }
};

// The symmetries whose linear part maps the column lattice of M to itself.
IsotropyGroup isotropy(const tilings::TilingSpec& spec, const lattice::HnfMatrix& M);

// { hnf(S.linear * M) : S in the symmetry list }, sorted and deduplicated.
// Its size times the isotropy order equals the symmetry list size.
std::vector<lattice::HnfMatrix> orbit_of_matrix(const tilings::TilingSpec& spec,
                                                const lattice::HnfMatrix& M);

struct IsoClass {
    lattice::HnfMatrix canonical;  // lexicographically least (d, b, a) in the orbit
    std::vector<lattice::HnfMatrix> members;
    IsotropyGroup isotropy;  // of the canonical representative
};

// Partitions `mats` (all of one determinant) into isomorphism classes.
std::vector<IsoClass> classify_up_to_iso(const tilings::TilingSpec& spec,
                                         const std::vector<lattice::HnfMatrix>& mats);

}  // namespace tumap::symmetry
