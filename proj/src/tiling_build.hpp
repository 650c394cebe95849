// Internal builder interface between tiling.cpp (machinery) and
// tiling_data.cpp (the 27 hand-entered geometries).
#pragma once

#include <functional>

#include "tumap/tiling.hpp"

namespace tumap::tilings {

// Euclidean description of one symmetry; the builder converts to lattice
// coordinates and checks integrality of the linear part.
struct RawSymmetry {
    std::string label;
    QuadMat linear;        // Euclidean orthogonal map, entries in Q[sqrt3]
    QuadPoint translation; // Euclidean; leave zero and set solve_translation
    bool solve_translation = false;  // derive the translation from the vertex action
};

struct RawTiling {
    int id = 0;
    std::string type_string;
    QuadPoint A, B;  // Euclidean period vectors
    QuadPoint origin;  // subtracted from every vertex; symmetries act about it
    std::vector<std::pair<QuadPoint, std::string>> verts;  // Euclidean position, vtype
    std::vector<RawSymmetry> syms;
    int declared_orbit_count = 1;
    int v0 = 0;
    std::vector<Quad> allowed_dist2;  // squared edge lengths; empty means {1}
};

// Reduces vertices mod the lattice, dedupes, derives edges from the allowed
// distance set, converts symmetries, and finalizes the spec.
TilingSpec build_tiling(const RawTiling& raw);

// Euclidean rotation by 30*k degrees and reflection about the axis at
// 15*j degrees (2*theta = 30*j), both with entries in Q[sqrt3].
QuadMat rot30(int k);
QuadMat refl15(int j);

}  // namespace tumap::tilings
