// Closed-form counts Phi_ell(v) of 2-uniform toroidal maps for all 27 types,
// the independent geometric brute-force oracle, representative listings, and
// the crosscheck that arbitrates between them.
//
// Where the published formulas failed their own consistency checks (types 3,
// 4 and 27), phi_closed carries the oracle-confirmed form and phi_published keeps
// the published one for audit; crosscheck() reports every difference.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tumap/intmat.hpp"
#include "tumap/symmetry.hpp"
#include "tumap/tiling.hpp"

namespace tumap::enumeration {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultOracleCap = 5000;  // max n * v0

// vertex count of the minimal map of type ell
uint64_t v0_of(int ell);

// Shipped counting function: 0 unless v0(ell) | v, otherwise the closed form
// at n = v / v0.  Types 3, 4 and 27 use the oracle-confirmed forms.
uint64_t phi_closed(int ell, uint64_t v);

// The formulas exactly as published (differs from phi_closed for 3, 4, 27).
// Throws numtheory::formula_defect if a published half-sum is not integral.
int64_t phi_published(int ell, uint64_t v);

// Number of vertex orbits of the cover E/L(M) under everything that descends:
// translations plus every symmetry whose linear part preserves L(M), acting
// through its full affine form.  Union-find over the n*v0 cover vertices.
uint64_t vertex_orbit_count(const tilings::TilingSpec& spec, const lattice::HnfMatrix& M);

struct Representative {
    lattice::HnfMatrix hnf;
    std::vector<std::string> isotropy_labels;
    size_t isotropy_order = 0;
};

struct EnumerationResult {
    int ell = 0;
    uint64_t vertices = 0;
    std::optional<uint64_t> sheets;  // v / v0, absent when v0 does not divide v
    uint64_t count_closed = 0;
    std::optional<uint64_t> count_oracle;
    std::vector<Representative> representatives;
    bool agreement = true;
};

// Enumerates all covers with v vertices, classifies them up to isomorphism,
// and keeps the classes whose covers have exactly 2 vertex orbits.  Throws
// cap_exceeded when n * v0 > cap.
EnumerationResult phi_oracle(int ell, uint64_t v, uint64_t cap = kDefaultOracleCap,
                             const tilings::TilingSpec* spec_override = nullptr);

std::string to_json(const EnumerationResult& r);

struct TableCell {
    uint64_t v = 0;
    uint64_t phi = 0;
    bool deviates_from_published = false;  // only ever set in the Phi_27 column
    std::optional<uint64_t> published;
};

struct TableColumn {
    int ell = 0;
    std::vector<TableCell> cells;
};

// First `rows` multiples of v0 for each requested type.
std::vector<TableColumn> table(const std::vector<int>& ells, int rows);

// The 24 published Table 1 columns: ell -> the ten (v, Phi) pairs.
// Returns an empty vector for types without a published column (3, 4, 25).
std::vector<std::pair<uint64_t, uint64_t>> published_column(int ell);

struct Discrepancy {
    int ell = 0;
    uint64_t sheets = 0;
    uint64_t vertices = 0;
    uint64_t closed = 0;
    uint64_t oracle = 0;
    std::vector<Representative> representatives;
};

struct FormulaNote {  // informational: published formula vs shipped form
    int ell = 0;
    uint64_t sheets = 0;
    int64_t published_value = 0;
    uint64_t shipped_value = 0;
    std::string what;
};

struct CrosscheckReport {
    uint64_t max_sheets = 0;
    uint64_t pairs_checked = 0;
    std::vector<Discrepancy> disagreements;  // oracle vs shipped closed form
    std::vector<FormulaNote> published_notes;    // published formula vs shipped form
};

// Compares phi_closed with phi_oracle for every ell in 1..27 and n <= max
// sheets; parallelizes over (ell, n).  threads = 0 means hardware default.
CrosscheckReport crosscheck(uint64_t max_sheets, int threads = 0,
                            const std::vector<tilings::TilingSpec>* specs = nullptr);

std::string to_json(const CrosscheckReport& r);

}  // namespace tumap::enumeration
