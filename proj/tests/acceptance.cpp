// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.
//
// Two criteria are mathematically unattainable as stated and are expected to
// come out RED; they are implemented faithfully anyway and their failure is
// analyzed inline:
//   - "Table 1 reproduction" permits deviation only in the Phi_27 column,
//     but the published Phi_9 column is wrong: the type-9 tiling has
//     90-degree rotation cosets its published analysis missed, and the
//     geometric oracle (criterion 2, green) pins Phi_9 = f6, not g.
//   - "Phi_ell <= tau(v/v0)" for the divisor family includes the f3-based
//     types 19/21/22/24, but f3(8) = 5 > tau(8) = 4; the published table
//     itself shows Phi_19(40) = 5, contradicting the bound it is paired with.
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tumap/asymptotics.hpp"
#include "tumap/enumerate.hpp"
#include "tumap/intmat.hpp"
#include "tumap/numtheory.hpp"
#include "tumap/symmetry.hpp"
#include "tumap/tiling.hpp"

namespace nt = tumap::numtheory;
namespace la = tumap::lattice;
namespace ti = tumap::tilings;
namespace sy = tumap::symmetry;
namespace en = tumap::enumeration;
namespace as = tumap::asymptotics;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    bool ok = true;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(const char* n) : name(n) {}
    void fail(const std::string& why) {
        ok = false;
        notes.push_back(why);
    }
    void note(const std::string& what) { notes.push_back(what); }
    void finish() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        printf("[%s] %-28s (%.2fs)\n", ok ? "PASS" : "FAIL", name, secs);
        for (const auto& n : notes) printf("       %s\n", n.c_str());
        if (!ok) ++g_failures;
        fflush(stdout);
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void table1_reproduction() {
    Criterion c("Table 1 reproduction");
    int cells = 0, mismatched = 0;
    std::vector<std::string> phi9_detail;
    for (int ell = 1; ell <= 27; ++ell) {
        auto pub = en::published_column(ell);
        if (pub.empty()) continue;
        for (const auto& [v, want] : pub) {
            ++cells;
            uint64_t got = en::phi_closed(ell, v);
            if (got == want) continue;
            if (ell == 27) continue;  // sole permitted exception: oracle governs
            ++mismatched;
            if (ell == 9)
                phi9_detail.push_back(fmt("Phi_9(%llu): published %llu, oracle-confirmed %llu",
                                          (unsigned long long)v, (unsigned long long)want,
                                          (unsigned long long)got));
            else
                c.fail(fmt("cell Phi_%d(%llu): published %llu, computed %llu", ell,
                           (unsigned long long)v, (unsigned long long)want,
                           (unsigned long long)got));
        }
    }
    // the Phi_27 deviations must be footnoted in table output and match verify
    auto cols = en::table({27, 9}, 10);
    auto rep = en::crosscheck(10, 0);
    for (const auto& cell : cols[0].cells) {
        bool in_verify = false;
        for (const auto& n : rep.published_notes)
            in_verify |= (n.ell == 27 && n.sheets == cell.v / 4 && n.what == "published Table 1 cell");
        bool should_deviate = cell.published && *cell.published != cell.phi;
        if (should_deviate != cell.deviates_from_published || should_deviate != in_verify) {
            c.fail(fmt("Phi_27(%llu): footnote flag and verify report out of sync",
                       (unsigned long long)cell.v));
        }
    }
    if (!phi9_detail.empty()) {
        c.fail(fmt("criterion permits deviation only for Phi_27, but %zu Phi_9 cells deviate:",
                   phi9_detail.size()));
        for (auto& d : phi9_detail) c.note("  " + d);
        c.note("analysis: the type-9 tiling's symmetry group contains 90-degree rotation");
        c.note("cosets (its published treatment models the extra symmetry as a glide);");
        c.note("with the full group only full-isotropy covers remain 2-uniform, so the");
        c.note("oracle-confirmed count is f6(n). See verify output and notes/decisions.md.");
    }
    c.note(fmt("%d published cells checked, %d deviating (9 in the Phi_9 column, footnoted "
               "like Phi_27's)", cells, mismatched));
    c.finish();
}

void oracle_crosscheck() {
    Criterion c("Oracle cross-check");
    auto rep = en::crosscheck(10, 0);
    if (!rep.disagreements.empty()) {
        for (const auto& d : rep.disagreements)
            c.fail(fmt("type %d n=%llu: closed=%llu oracle=%llu", d.ell,
                       (unsigned long long)d.sheets, (unsigned long long)d.closed,
                       (unsigned long long)d.oracle));
    }
    // reference fixtures for the unpublished type 3/4 columns
    const uint64_t phi3[10] = {1, 2, 3, 5, 4, 7, 5, 10, 8, 10};
    const uint64_t phi4[10] = {1, 3, 3, 6, 4, 9, 5, 11, 8, 12};
    std::string f3s = "type 3 oracle fixture (n=1..10):", f4s = "type 4 oracle fixture (n=1..10):";
    for (uint64_t n = 1; n <= 10; ++n) {
        auto r3 = en::phi_oracle(3, 4 * n);
        auto r4 = en::phi_oracle(4, 3 * n);
        if (*r3.count_oracle != phi3[n - 1])
            c.fail(fmt("type 3 n=%llu: oracle %llu != fixture %llu", (unsigned long long)n,
                       (unsigned long long)*r3.count_oracle, (unsigned long long)phi3[n - 1]));
        if (*r4.count_oracle != phi4[n - 1])
            c.fail(fmt("type 4 n=%llu: oracle %llu != fixture %llu", (unsigned long long)n,
                       (unsigned long long)*r4.count_oracle, (unsigned long long)phi4[n - 1]));
        f3s += fmt(" %llu", (unsigned long long)*r3.count_oracle);
        f4s += fmt(" %llu", (unsigned long long)*r4.count_oracle);
    }
    c.note(fmt("%llu (type, sheets) pairs agree", (unsigned long long)rep.pairs_checked));
    c.note(f3s);
    c.note(f4s);
    c.finish();
}

void example_fixtures() {
    Criterion c("Worked-example fixtures");
    auto r32 = en::phi_oracle(23, 32);
    auto r36 = en::phi_oracle(23, 36);
    if (*r32.count_oracle != 3) c.fail("type 23 v=32: expected 3 classes");
    if (*r36.count_oracle != 3) c.fail("type 23 v=36: expected 3 classes");
    auto canon = [&](la::HnfMatrix M) {
        return sy::orbit_of_matrix(ti::spec(23), M).front();
    };
    auto cover = [&](const en::EnumerationResult& r, std::vector<la::HnfMatrix> pub) {
        std::set<la::HnfMatrix> got, want;
        for (const auto& rep : r.representatives) got.insert(canon(rep.hnf));
        for (const auto& M : pub) want.insert(canon(M));
        return got == want;
    };
    if (!cover(r32, {{2, 1, 4}, {1, 3, 8}, {1, 1, 8}}))
        c.fail("v=32 classes do not cover the published HNFs [2,1,4],[1,3,8],[1,1,8]");
    if (!cover(r36, {{1, 1, 9}, {1, 2, 9}, {1, 3, 9}}))
        c.fail("v=36 classes do not cover the published HNFs [1,1,9],[1,2,9],[1,3,9]");
    c.note("published representatives matched by point-group class equivalence");
    c.finish();
}

void numbertheory_suite() {
    Criterion c("Number-theory suite");
    auto s11 = nt::rho_ij(1, 1), s01 = nt::rho_ij(0, 1), s20 = nt::rho_ij(2, 0),
         s0m1 = nt::rho_ij(0, -1);
    auto s5 = nt::rho5(), s6 = nt::rho6();
    for (uint64_t n = 1; n <= 10000; ++n) {
        if (nt::f1(n) != nt::norm_square_divisor_sum(s11, n)) c.fail(fmt("f1 != sum at %llu", n));
        if (nt::f2(n) != nt::norm_square_divisor_sum(s01, n)) c.fail(fmt("f2 != sum at %llu", n));
        if (nt::f3(n) != nt::norm_square_divisor_sum(s20, n)) c.fail(fmt("f3 != sum at %llu", n));
        if (nt::f4(n) != nt::norm_square_divisor_sum(s0m1, n)) c.fail(fmt("f4 != sum at %llu", n));
        if (nt::f5(n) != nt::norm_square_divisor_sum(s5, n)) c.fail(fmt("f5 != sum at %llu", n));
        if (nt::f6(n) != nt::norm_square_divisor_sum(s6, n)) c.fail(fmt("f6 != sum at %llu", n));
        if (nt::f3(n) != nt::f4(n) || nt::f4(n) != nt::f8(n)) c.fail(fmt("f3=f4=f8 fails at %llu", n));
        if (c.notes.size() > 8) break;
    }
    std::vector<nt::CongruenceSystem> systems = {s11, s01, s20, s0m1, s5, s6, nt::rho7()};
    for (const auto& sys : systems)
        for (uint64_t a = 2; a <= 200 && c.ok; ++a)
            for (uint64_t b = a + 1; b <= 200; ++b) {
                if (std::gcd(a, b) != 1) continue;
                if (nt::count_congruence_roots(sys, a * b) !=
                    nt::count_congruence_roots(sys, a) * nt::count_congruence_roots(sys, b)) {
                    c.fail(fmt("multiplicativity fails for %s at (%llu, %llu)", sys.name.c_str(),
                               (unsigned long long)a, (unsigned long long)b));
                    break;
                }
            }
    for (int k = 1; k <= 12; ++k)
        if (nt::count_congruence_roots(s11, uint64_t(1) << k) != 0)
            c.fail(fmt("rho_{1,1}(2^%d) != 0", k));
    for (int k = 3; k <= 16; ++k)
        if (nt::count_congruence_roots(s0m1, uint64_t(1) << k) != 4)
            c.fail(fmt("rho_{0,-1}(2^%d) != 4", k));
    c.note("dual forms equal to n = 10^4; rho multiplicative on coprime pairs to 200");
    c.note("(the divisor-congruence remarks for f1/f2 fail at n=4/n=9; demoted, pinned");
    c.note(" by the unit tests)");
    c.finish();
}

void lattice_suite() {
    Criterion c("Lattice suite");
    for (uint64_t n = 1; n <= 500; ++n)
        if (la::hnf_enumerate(n).size() != nt::sigma(n)) c.fail(fmt("|hnf(%llu)| != sigma", n));
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-50, 50), shear(-3, 3), pick(0, 2);
    int done = 0;
    while (done < 200) {
        la::IntMatrix2 M{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (M.det() == 0) continue;
        ++done;
        auto H = la::hnf_reduce(M);
        if (!(la::hnf_reduce(H.matrix()) == H)) c.fail("idempotence fails");
        la::IntMatrix2 U = la::identity2();
        for (int i = 0; i < 6; ++i) {
            int64_t s = shear(rng);
            la::IntMatrix2 E;
            switch (pick(rng)) {
                case 0: E = {1, s, 0, 1}; break;
                case 1: E = {1, 0, s, 1}; break;
                default: E = {0, -1, 1, 0}; break;
            }
            U = U * E;
        }
        if (!(la::hnf_reduce(M * U) == H)) c.fail("right-unimodular invariance fails");
    }
    la::IntMatrix2 rho60{0, -1, 1, 1};
    for (uint64_t n = 1; n <= 100; ++n)
        for (const auto& M : la::hnf_enumerate(n)) {
            bool conds = (M.b % M.a == 0) && (M.d % M.a == 0) &&
                         ((M.a * M.a + M.a * M.b + M.b * M.b) % (M.a * M.d) == 0);
            if (la::conjugation_integral(rho60, M) != conds) {
                c.fail(fmt("60-degree lemma conditions fail at [%lld,%lld,%lld]", M.a, M.b, M.d));
            }
        }
    c.note("sigma counts to 500; 200 random invariance cases; lemma conditions to n=100");
    c.finish();
}

void tiling_validation() {
    Criterion c("Tiling self-validation");
    const auto& specs = ti::builtin_specs();
    for (const auto& s : specs) {
        auto rep = ti::validate(s);
        if (!rep.all_ok())
            for (const auto& i : rep.issues)
                c.fail(fmt("E%d %s: %s", s.id, i.check.c_str(), i.detail.c_str()));
    }
    auto order_is = [&](int ell, int want) {
        if (ti::spec(ell).point_group_order() != want)
            c.fail(fmt("E%d point group order %d != %d", ell,
                       ti::spec(ell).point_group_order(), want));
    };
    for (int ell : {2, 5, 6, 7, 11, 14, 17, 20, 21, 22, 24, 26}) order_is(ell, 12);
    for (int ell : {16, 27}) order_is(ell, 8);
    order_is(23, 4);
    for (int ell : {1, 25}) order_is(ell, 6);
    for (int ell : {3, 4, 8, 12, 13, 15, 18, 19}) order_is(ell, 4);
    c.note("27/27 specs pass symmetry closure, face cycles, orbit counts");
    c.finish();
}

void parity_properties() {
    Criterion c("Parity properties");
    for (uint64_t n = 1; n <= 200; ++n) {
        try {
            for (int ell = 1; ell <= 27; ++ell) (void)en::phi_closed(ell, n * en::v0_of(ell));
        } catch (const nt::formula_defect& e) {
            c.fail(fmt("integrality defect at n=%llu: %s", (unsigned long long)n, e.what()));
        }
        if ((nt::f1(n) + nt::f5(n)) % 2 || (nt::sigma(n) + nt::f3(n)) % 2 ||
            (nt::sigma(n) + nt::g(n)) % 2 || (nt::f2(n) + nt::f6(n)) % 2 ||
            (nt::f1(n) - nt::f5(n)) % 2 ||
            (nt::sigma(n) - nt::g(n) - nt::f2(n) + nt::f3(n)) % 4)
            c.fail(fmt("parity failure at n=%llu", (unsigned long long)n));
    }
    c.note("all shipped halved/quartered formulas integral to n = 200");
    c.note("(the published sigma+g1 and sigma+g2 pairings are odd at n=3: known defect,");
    c.note(" those tables are already overruled by the lattice filter count)");
    c.finish();
}

void asymptotics_suite() {
    Criterion c("Asymptotics");
    // criterion as stated: tau family includes the f3-based types
    const int tau_family[] = {1, 2, 5, 6, 7, 11, 14, 16, 17, 19, 20, 21, 22, 24, 26};
    std::set<int> tau_violators;
    for (int ell : tau_family) {
        uint64_t v0 = en::v0_of(ell);
        for (uint64_t v = v0; v <= 10000; v += v0)
            if (en::phi_closed(ell, v) > nt::tau(v / v0)) tau_violators.insert(ell);
    }
    for (int ell : {9, 10, 18}) {
        uint64_t v0 = en::v0_of(ell);
        for (uint64_t v = v0; v <= 10000; v += v0)
            if (en::phi_closed(ell, v) > 2 * nt::tau(v / v0))
                c.fail(fmt("glide family bound fails for type %d", ell));
    }
    if (!tau_violators.empty()) {
        std::string who;
        for (int ell : tau_violators) who += fmt(" %d", ell);
        c.fail(fmt("Phi <= tau fails for the f3-based types:%s", who.c_str()));
        c.note("analysis: the published claim f_i <= tau is false for f3 = f4");
        c.note(fmt("(f3(8) = %llu > tau(8) = %llu; the published table itself has "
                   "Phi_19(40) = 5);", (unsigned long long)nt::f3(8),
                   (unsigned long long)nt::tau(8)));
        c.note("these types do satisfy the 2*tau envelope, pinned by the unit tests.");
    }

    // sigma running-max scan
    {
        const uint64_t N = 100000;
        std::vector<uint64_t> sig(N + 1, 0);
        for (uint64_t d = 1; d <= N; ++d)
            for (uint64_t m = d; m <= N; m += d) sig[m] += d;
        double max_all = 0, max_stable = 0;
        uint64_t arg_all = 0, arg_stable = 0;
        for (uint64_t v = 3; v <= N; ++v) {
            double ratio = (double)sig[v] / ((double)v * std::log(std::log((double)v)));
            if (ratio > max_all) { max_all = ratio; arg_all = v; }
            if (v >= 25 && ratio > max_stable) { max_stable = ratio; arg_stable = v; }
        }
        if (max_stable > 2.0)
            c.fail(fmt("sigma scan: running max %.4f at v=%llu exceeds 2.0", max_stable,
                       (unsigned long long)arg_stable));
        c.note(fmt("sigma/(v lnln v): max %.4f at v=%llu from v=25 (<= 2.0, trend to e^gamma "
                   "= 1.7811);", max_stable, (unsigned long long)arg_stable));
        c.note(fmt("small-v transient max %.2f at v=%llu (v<25, reported unasserted)", max_all,
                   (unsigned long long)arg_all));
    }

    // Phi_27 against its bound
    {
        double worst = 0;
        uint64_t argw = 0;
        for (uint64_t v = 20; v <= 40000; v += 4) {
            double r = (double)en::phi_closed(27, v) / as::bound27((double)v);
            if (r > worst) { worst = r; argw = v; }
        }
        if (worst > 1.5)
            c.fail(fmt("Phi_27/bound27 = %.3f at v=%llu exceeds 1.5", worst,
                       (unsigned long long)argw));
        c.note(fmt("Phi_27/bound27 max %.4f at v=%llu for 20 <= v <= 40000 "
                   "(v=12,16 transients: %.2f, %.2f, unasserted)", worst,
                   (unsigned long long)argw,
                   (double)en::phi_closed(27, 12) / as::bound27(12.0),
                   (double)en::phi_closed(27, 16) / as::bound27(16.0)));
    }

    // ratio-trend tables, emitted but not asserted
    for (int ell : {27, 23, 8}) {
        std::vector<uint64_t> samples;
        uint64_t v0 = en::v0_of(ell);
        for (uint64_t m = 1; m <= 4; ++m) samples.push_back(v0 * m * 100);
        auto rep = as::growth_report(ell, samples);
        std::string line = fmt("type %d ratio trend (%s):", ell, rep.bound_name.c_str());
        for (const auto& s : rep.samples)
            line += fmt(" v=%llu:%.3f", (unsigned long long)s.v, s.ratio);
        c.note(line);
    }
    c.finish();
}

}  // namespace

int main() {
    printf("acceptance criteria\n===================\n");
    table1_reproduction();
    oracle_crosscheck();
    example_fixtures();
    numbertheory_suite();
    lattice_suite();
    tiling_validation();
    parity_properties();
    asymptotics_suite();
    printf("===================\n");
    if (g_failures) {
        printf("%d criterion/criteria failed. The Table-1 and tau-family failures are\n",
               g_failures);
        printf("mathematically forced (the published Phi_9 column and the f_i <= tau claim\n");
        printf("are wrong; they contradict the oracle and the published table respectively).\n");
        printf("Details above and in the repository README.\n");
    } else {
        printf("all criteria passed\n");
    }
    return g_failures ? 1 : 0;
}
