// Self-validating geometric data for the 27 plane tilings E1..E27: basis
// vectors, fundamental-domain vertices, edges, symmetry lists, declared
// vertex types.  Vertex positions live in lattice coordinates over
// Q[sqrt(3)]; symmetry actions on them are exact.  Floating point enters
// only in the angular ordering of edges around a vertex (face walking).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tumap/exactq.hpp"
#include "tumap/intmat.hpp"

namespace tumap::tilings {

// One plane symmetry in lattice coordinates: q |-> linear * q + translation.
// Glides carry a half-lattice translation part; point symmetries about the
// chosen origin carry an integral one.
struct AffineSymmetry {
    std::string label;
    lattice::IntMatrix2 linear;  // det +-1
    Rational t1, t2;             // denominators restricted to 1 or 2

    bool integral_translation() const { return t1.is_integer() && t2.is_integer(); }
};

struct VertexSpec {
    QuadPoint pos;  // lattice coordinates, each component in [0, 1)
    std::string vtype;
};

struct EdgeSpec {
    int i, j;                     // vertex indices
    std::array<int64_t, 2> off;   // j lives in the cell shifted by off1*A + off2*B
};

struct TilingSpec {
    int id = 0;
    std::string type_string;
    QuadPoint basisA, basisB;  // Euclidean coordinates of the period vectors
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<AffineSymmetry> symmetries;  // identity-closed full coset list
    int declared_orbit_count = 1;
    int v0 = 0;

    // cached exact action of symmetry s on vertex i:
    //   image vertex index and the integer lattice offset delta with
    //   linear * pos_i + t = pos_{image} + delta
    std::vector<std::vector<int>> sym_image;
    std::vector<std::vector<std::array<int64_t, 2>>> sym_offset;

    QuadPoint euclid(const QuadPoint& lattice_pos) const {
        return {basisA.x * lattice_pos.x + basisB.x * lattice_pos.y,
                basisA.y * lattice_pos.x + basisB.y * lattice_pos.y};
    }

    int point_group_order() const;      // elements fixing the origin mod nothing
    size_t symmetry_count() const { return symmetries.size(); }

    // Computes sym_image/sym_offset and checks structural invariants
    // (b-ranges, translation denominators, vertex count).  Throws on failure.
    void finalize();
};

struct ValidationIssue {
    std::string check;   // "symmetry_closure", "vertex_map", "edge_map", "face_cycle", "orbit_count"
    std::string detail;
};

struct ValidationReport {
    int tiling_id = 0;
    bool symmetry_closure_ok = true;
    bool vertex_edge_closure_ok = true;
    bool face_cycles_ok = true;
    bool orbit_count_ok = true;
    int computed_orbit_count = 0;
    std::vector<ValidationIssue> issues;

    bool all_ok() const {
        return symmetry_closure_ok && vertex_edge_closure_ok && face_cycles_ok && orbit_count_ok;
    }
};

// Runs every check and never aborts early; each violation is recorded with
// the offending vertex or symmetry.
ValidationReport validate(const TilingSpec& spec);

// Face cycle of every vertex, computed by walking faces in counterclockwise
// angular order; entry k of the result for vertex v is the size of the k-th
// face around v. Exposed for tests.
std::vector<std::vector<int>> face_cycles(const TilingSpec& spec);

// Vertex-type strings: "[3^2,4^1,3^1,4^1]" <-> expanded cycle {3,3,4,3,4}.
std::vector<int> parse_vertex_type(const std::string& s);
bool same_cycle_up_to_rotation_reversal(const std::vector<int>& a, const std::vector<int>& b);

// The 27 builtin tilings, index ell-1.  Specs are immutable after load.
const std::vector<TilingSpec>& builtin_specs();
const TilingSpec& spec(int ell);

// JSON serialization per the documented schema.
std::string save_spec(const TilingSpec& spec);
TilingSpec load_spec(const std::string& json_text);  // schema errors throw tiling_error

// Loads E<k>.json overrides from a directory; ids not present fall back to
// the builtins.
std::vector<TilingSpec> specs_with_overrides(const std::string& dir);

struct tiling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tumap::tilings
