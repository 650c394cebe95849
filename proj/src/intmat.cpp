#include "tumap/intmat.hpp"

#include <numeric>
#include <stdexcept>

#include "tumap/numtheory.hpp"

namespace tumap::lattice {

namespace {
using i64 = int64_t;
using i128 = __int128;

i64 narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return (i64)v;
}
}  // namespace

i64 IntMatrix2::det() const {
    return narrow((i128)m11 * m22 - (i128)m12 * m21, "IntMatrix2::det overflow");
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
    return {narrow((i128)m11 * o.m11 + (i128)m12 * o.m21, "matrix product overflow"),
            narrow((i128)m11 * o.m12 + (i128)m12 * o.m22, "matrix product overflow"),
            narrow((i128)m21 * o.m11 + (i128)m22 * o.m21, "matrix product overflow"),
            narrow((i128)m21 * o.m12 + (i128)m22 * o.m22, "matrix product overflow")};
}

bool HnfMatrix::operator<(const HnfMatrix& o) const {
    if (d != o.d) return d < o.d;
    if (b != o.b) return b < o.b;
    return a < o.a;
}

HnfMatrix hnf_reduce(const IntMatrix2& M) {
    if (M.det() == 0) throw std::domain_error("hnf_reduce: singular matrix");
    // columns c1 = (x1, y1), c2 = (x2, y2); column operations only
    i64 x1 = M.m11, y1 = M.m21, x2 = M.m12, y2 = M.m22;
    // clear the top-right entry with an extended-gcd column mix
    while (x2 != 0) {
        i64 q = x1 / x2;
        i64 nx = x1 - q * x2, ny = y1 - q * y2;
        x1 = x2;
        y1 = y2;
        x2 = nx;
        y2 = ny;
    }
    // now column 2 = (0, y2'); normalize signs
    if (x1 < 0) {
        x1 = -x1;
        y1 = -y1;
    }
    if (y2 < 0) y2 = -y2;
    // x1 = a > 0, y2 = d > 0 since det was nonzero
    i64 b = ((y1 % y2) + y2) % y2;
    return HnfMatrix{x1, b, y2};
}

std::vector<HnfMatrix> hnf_enumerate(uint64_t n) {
    if (n == 0) throw std::domain_error("hnf_enumerate: n must be positive");
    std::vector<HnfMatrix> out;
    for (uint64_t d : numtheory::divisors(n)) {
        i64 a = (i64)(n / d);
        for (i64 b = 0; b < (i64)d; ++b) out.push_back(HnfMatrix{a, b, (i64)d});
    }
    return out;  // divisors ascending => sorted by (d, b) already
}

bool unimodular_equal(const IntMatrix2& M1, const IntMatrix2& M2) {
    if (M1.det() == 0 || M2.det() == 0)
        throw std::domain_error("unimodular_equal: singular matrix");
    return hnf_reduce(M1) == hnf_reduce(M2);
}

namespace {

// entries of adj(M) * S * M; integrality of each entry / det(M) is the test
struct ConjEntries {
    i128 e11, e12, e21, e22;
    i64 det;
};

ConjEntries conjugate_entries(const IntMatrix2& S, const HnfMatrix& H) {
    IntMatrix2 M = H.matrix();
    i64 det = M.det();
    // adj(M) = [ m22 -m12; -m21 m11 ]
    i128 a11 = M.m22, a12 = -M.m12, a21 = -M.m21, a22 = M.m11;
    // T = S * M
    i128 t11 = (i128)S.m11 * M.m11 + (i128)S.m12 * M.m21;
    i128 t12 = (i128)S.m11 * M.m12 + (i128)S.m12 * M.m22;
    i128 t21 = (i128)S.m21 * M.m11 + (i128)S.m22 * M.m21;
    i128 t22 = (i128)S.m21 * M.m12 + (i128)S.m22 * M.m22;
    return {a11 * t11 + a12 * t21, a11 * t12 + a12 * t22,
            a21 * t11 + a22 * t21, a21 * t12 + a22 * t22, det};
}

}  // namespace

bool conjugation_integral(const IntMatrix2& S, const HnfMatrix& M) {
    auto c = conjugate_entries(S, M);
    return c.e11 % c.det == 0 && c.e12 % c.det == 0 && c.e21 % c.det == 0 &&
           c.e22 % c.det == 0;
}

DivisibilityReport divisibility_report(const IntMatrix2& S, const HnfMatrix& M) {
    auto c = conjugate_entries(S, M);
    DivisibilityReport rep;
    const char* names[4] = {"(M^-1 S M)[1][1]", "(M^-1 S M)[1][2]", "(M^-1 S M)[2][1]",
                            "(M^-1 S M)[2][2]"};
    i128 vals[4] = {c.e11, c.e12, c.e21, c.e22};
    for (int i = 0; i < 4; ++i) {
        DivisibilityCondition cond;
        cond.description = names[i];
        cond.numerator = narrow(vals[i], "divisibility_report overflow");
        cond.denominator = c.det;
        cond.satisfied = (vals[i] % c.det == 0);
        rep.all_satisfied = rep.all_satisfied && cond.satisfied;
        rep.conditions.push_back(cond);
    }
    return rep;
}

uint64_t hnf_filter_count(const IntMatrix2& S, uint64_t n) {
    uint64_t cnt = 0;
    for (const auto& M : hnf_enumerate(n))
        if (conjugation_integral(S, M)) ++cnt;
    return cnt;
}

IntMatrix2 shear_reflection(int64_t c) { return {1, c, 0, -1}; }

}  // namespace tumap::lattice
