// Exact 2x2 integer matrix machinery: Hermite normal form, sublattice
// enumeration, unimodular equality, and conjugation-integrality tests.
//
// Conventions: a matrix holds the images of the two lattice basis vectors
// as its columns.  The Hermite normal form of a finite-index sublattice is
// the lower-triangular representative
//     [ a 0 ]
//     [ b d ]        a, d >= 1,  0 <= b < d,
// which names the sublattice generated by a*A + b*B and d*B uniquely.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tumap::lattice {

struct IntMatrix2 {
    // entries m[row][col]; column j is the image of basis vector j
    int64_t m11, m12, m21, m22;

    int64_t det() const;
    IntMatrix2 operator*(const IntMatrix2& o) const;
    bool operator==(const IntMatrix2& o) const = default;
};

inline IntMatrix2 identity2() { return {1, 0, 0, 1}; }

struct HnfMatrix {
    int64_t a = 1;  // >= 1
    int64_t b = 0;  // 0 <= b < d
    int64_t d = 1;  // >= 1

    int64_t det() const { return a * d; }
    IntMatrix2 matrix() const { return {a, 0, b, d}; }
    bool operator==(const HnfMatrix& o) const = default;
    // canonical order used everywhere: lexicographic by (d, b, a)
    bool operator<(const HnfMatrix& o) const;
};

// Unique HNF of the column lattice of M.  Throws std::domain_error if M is
// singular.
HnfMatrix hnf_reduce(const IntMatrix2& M);

// All HNF matrices of determinant n, sorted lexicographically by (d, b).
// The list has length sigma(n).
std::vector<HnfMatrix> hnf_enumerate(uint64_t n);

// True iff the column lattices of M1 and M2 coincide.
bool unimodular_equal(const IntMatrix2& M1, const IntMatrix2& M2);

// True iff M^{-1} S M has integer entries (computed via the adjugate, no
// rational rounding).  S must be unimodular (det +-1).
bool conjugation_integral(const IntMatrix2& S, const HnfMatrix& M);

struct DivisibilityCondition {
    std::string description;  // which entry of M^{-1} S M
    int64_t numerator;
    int64_t denominator;
    bool satisfied;  // numerator % denominator == 0
};

struct DivisibilityReport {
    std::vector<DivisibilityCondition> conditions;
    bool all_satisfied = true;
};

DivisibilityReport divisibility_report(const IntMatrix2& S, const HnfMatrix& M);

// Number of HNF matrices of determinant n whose lattice is preserved by S,
// i.e. sum over hnf_enumerate(n) of conjugation_integral(S, .).  This is the
// ground-truth mirror count that the published g1/g2 tables are checked
// against.
uint64_t hnf_filter_count(const IntMatrix2& S, uint64_t n);

// The sheared reflections [[1, c], [0, -1]] (columns: A -> A, B -> cA - B)
// whose filter counts drive the strip tilings.
IntMatrix2 shear_reflection(int64_t c);

}  // namespace tumap::lattice
