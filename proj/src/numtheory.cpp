#include "tumap/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace tumap::numtheory {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;
using i64 = int64_t;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u128 r = (u128)a * b;
    if (r > UINT64_MAX) throw std::overflow_error("64-bit overflow in exact arithmetic");
    return (u64)r;
}

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < s - 1; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

i64 poly_eval_mod(const std::vector<i64>& coeffs, u64 x, u64 m) {
    // Horner, constant term first.
    u64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        i64 c = *it;
        u64 cm = (c % (i64)m + (i64)m) % (i64)m;
        acc = (mulmod(acc, x, m) + cm) % m;
    }
    return (i64)acc;
}

bool satisfies_all(const CongruenceSystem& sys, u64 x, u64 m) {
    for (const auto& p : sys.polys)
        if (poly_eval_mod(p, x, m) != 0) return false;
    return true;
}

// Formal derivative of a constant-first coefficient list.
std::vector<i64> derivative(const std::vector<i64>& coeffs) {
    std::vector<i64> d;
    for (size_t i = 1; i < coeffs.size(); ++i) d.push_back((i64)i * coeffs[i]);
    if (d.empty()) d.push_back(0);
    return d;
}

// Roots of one quadratic (or linear) polynomial mod an odd prime p, without
// enumerating residues.  Used only when p exceeds the brute-force cap.
std::vector<u64> poly_roots_mod_prime(const std::vector<i64>& coeffs, u64 p) {
    auto red = [&](i64 c) { return (u64)((c % (i64)p + (i64)p) % (i64)p); };
    u64 c0 = coeffs.size() > 0 ? red(coeffs[0]) : 0;
    u64 c1 = coeffs.size() > 1 ? red(coeffs[1]) : 0;
    u64 c2 = coeffs.size() > 2 ? red(coeffs[2]) : 0;
    std::vector<u64> roots;
    if (c2 == 0) {
        if (c1 == 0) {
            if (c0 == 0)
                for (u64 x = 0; x < p && x < 4; ++x) roots.push_back(x);  // degenerate, p tiny only
            return roots;
        }
        // c1 x + c0 = 0
        u64 inv = powmod(c1, p - 2, p);
        roots.push_back(mulmod(p - c0 % p, inv, p) % p);
        return roots;
    }
    // quadratic: x = (-c1 +- sqrt(c1^2 - 4 c0 c2)) / (2 c2), p odd
    u64 disc = (mulmod(c1, c1, p) + p - mulmod(4 % p, mulmod(c0, c2, p), p)) % p;
    if (disc == 0) {
        u64 inv2a = powmod(mulmod(2, c2, p), p - 2, p);
        roots.push_back(mulmod((p - c1) % p, inv2a, p));
        return roots;
    }
    if (powmod(disc, (p - 1) / 2, p) != 1) return roots;  // non-residue
    // Tonelli-Shanks
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(disc, q, p), r = powmod(disc, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = powmod(c, u64(1) << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    u64 inv2a = powmod(mulmod(2, c2, p), p - 2, p);
    roots.push_back(mulmod((r + p - c1 % p) % p, inv2a, p));
    roots.push_back(mulmod((p - r + p - c1 % p) % p, inv2a, p));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Roots of the whole system mod p^k for p^k above the brute cap.
// Strategy: roots mod p first (brute when p is small, closed-form otherwise),
// then lift level by level.  Where some polynomial has a unit derivative the
// lift is unique and cheap; in the fully singular case (only small p, in
// practice p = 2 or 3) every candidate r + t p^j is checked.
u64 count_roots_pp_lifted(const CongruenceSystem& sys, u64 p, int k, u64 brute_cap) {
    std::vector<u64> roots;
    if (p <= brute_cap) {
        for (u64 x = 0; x < p; ++x)
            if (satisfies_all(sys, x, p)) roots.push_back(x);
    } else {
        // intersect closed-form root sets of the individual polynomials
        bool first = true;
        for (const auto& poly : sys.polys) {
            auto r = poly_roots_mod_prime(poly, p);
            if (first) {
                roots = r;
                first = false;
            } else {
                std::vector<u64> kept;
                for (u64 x : roots)
                    if (std::find(r.begin(), r.end(), x) != r.end()) kept.push_back(x);
                roots = kept;
            }
        }
    }
    if (k == 1) return roots.size();

    std::vector<std::vector<i64>> derivs;
    for (const auto& poly : sys.polys) derivs.push_back(derivative(poly));

    u64 mod = p;
    for (int level = 1; level < k; ++level) {
        u64 next = checked_mul(mod, p);
        std::vector<u64> lifted;
        for (u64 r : roots) {
            // try the unit-derivative shortcut on any one polynomial
            int unit_idx = -1;
            u64 fprime = 0;
            for (size_t pi = 0; pi < sys.polys.size(); ++pi) {
                u64 d = (u64)poly_eval_mod(derivs[pi], r % p, p);
                if (d % p != 0) {
                    unit_idx = (int)pi;
                    fprime = (u64)poly_eval_mod(derivs[pi], r, p);
                    break;
                }
            }
            if (unit_idx >= 0) {
                u64 fv = (u64)poly_eval_mod(sys.polys[unit_idx], r, next);
                // f(r + t mod) = f(r) + t mod f'(r) (mod next); solve for t
                u64 rhs = (next - fv) % next / mod;  // fv divisible by mod since r is a root
                u64 t = mulmod(rhs % p, powmod(fprime % p, p - 2, p), p);
                u64 cand = r + t * mod;
                if (satisfies_all(sys, cand, next)) lifted.push_back(cand);
            } else {
                for (u64 t = 0; t < p; ++t) {
                    u64 cand = r + t * mod;
                    if (satisfies_all(sys, cand, next)) lifted.push_back(cand);
                }
            }
        }
        roots = std::move(lifted);
        mod = next;
        if (roots.empty()) return 0;
    }
    return roots.size();
}

u64 count_roots_prime_power(const CongruenceSystem& sys, u64 p, int k, u64 brute_cap) {
    u128 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (pk <= brute_cap) {
        u64 m = (u64)pk;
        u64 cnt = 0;
        for (u64 x = 0; x < m; ++x)
            if (satisfies_all(sys, x, m)) ++cnt;
        return cnt;
    }
    if (pk > UINT64_MAX) throw std::overflow_error("modulus exceeds 64 bits");
    return count_roots_pp_lifted(sys, p, k, brute_cap);
}

constexpr u64 kDefaultBruteCap = 1000000;

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a)) return false;
    (void)d;
    return true;
}

PrimeFactorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    PrimeFactorization f;
    f.value = n;
    std::map<u64, int> acc;
    for (u64 p : {2, 3, 5}) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
    }
    for (u64 p = 7; p * p <= n && p < 1000000; p += 2) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, acc);
    for (auto& [p, k] : acc) f.factors.emplace_back(p, k);
    return f;
}

std::vector<u64> divisors(const PrimeFactorization& f) {
    std::vector<u64> ds{1};
    for (auto [p, k] : f.factors) {
        size_t base = ds.size();
        u64 pe = 1;
        for (int e = 1; e <= k; ++e) {
            pe = checked_mul(pe, p);
            for (size_t i = 0; i < base; ++i) ds.push_back(checked_mul(ds[i], pe));
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 sigma(u64 n) {
    if (n == 0) throw std::domain_error("sigma: n must be positive");
    auto f = factorize(n);
    u64 s = 1;
    for (auto [p, k] : f.factors) {
        // geometric series 1 + p + ... + p^k, exact
        u64 term = 1, pe = 1;
        for (int e = 1; e <= k; ++e) {
            pe = checked_mul(pe, p);
            term = term + pe;
        }
        s = checked_mul(s, term);
    }
    return s;
}

u64 tau(u64 n) {
    if (n == 0) throw std::domain_error("tau: n must be positive");
    auto f = factorize(n);
    u64 t = 1;
    for (auto [p, k] : f.factors) t = checked_mul(t, (u64)k + 1);
    return t;
}

CongruenceSystem rho_ij(i64 i, i64 j) {
    return {"rho_{" + std::to_string(i) + "," + std::to_string(j) + "}",
            {{j, i, 1}}};
}
CongruenceSystem rho5() { return {"rho5", {{0, 2, 1}, {-1, 0, 1}}}; }
CongruenceSystem rho6() { return {"rho6", {{1, 0, 1}, {-1, 0, 1}}}; }
CongruenceSystem rho7() { return {"rho7", {{1, 0, 1}, {0, 2}}}; }

u64 count_congruence_roots_with_cap(const CongruenceSystem& sys, u64 m, u64 brute_cap) {
    if (m == 0) throw std::domain_error("count_congruence_roots: modulus must be positive");
    if (m == 1) return 1;
    auto f = factorize(m);
    u64 total = 1;
    for (auto [p, k] : f.factors)
        total = checked_mul(total, count_roots_prime_power(sys, p, k, brute_cap));
    return total;
}

u64 count_congruence_roots(const CongruenceSystem& sys, u64 m) {
    return count_congruence_roots_with_cap(sys, m, kDefaultBruteCap);
}

u64 count_congruence_roots_brute(const CongruenceSystem& sys, u64 m) {
    if (m == 0) throw std::domain_error("count_congruence_roots_brute: modulus must be positive");
    u64 cnt = 0;
    for (u64 x = 0; x < m; ++x)
        if (satisfies_all(sys, x, m)) ++cnt;
    return cnt;
}

u64 norm_square_divisor_sum(const CongruenceSystem& sys, u64 n) {
    if (n == 0) throw std::domain_error("norm_square_divisor_sum: n must be positive");
    u64 total = 0;
    for (u64 d : divisors(n)) {
        u128 d2 = (u128)d * d;
        if (d2 % n != 0) continue;
        u128 q = d2 / n;
        if (q > UINT64_MAX) throw std::overflow_error("modulus exceeds 64 bits");
        total += count_congruence_roots(sys, (u64)q);
    }
    return total;
}

int v2(u64 n) {
    int k = 0;
    while (n && (n & 1) == 0) n >>= 1, ++k;
    return k;
}

u64 odd_part(u64 n) { return n >> v2(n); }

namespace {

// Multiplicative evaluation driver: value = product of pp(p, k).
template <typename F>
u64 multiplicative(u64 n, F pp) {
    if (n == 0) throw std::domain_error("multiplicative function: n must be positive");
    auto f = factorize(n);
    u64 v = 1;
    for (auto [p, k] : f.factors) v = checked_mul(v, pp(p, k));
    return v;
}

}  // namespace

u64 f1(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 3) return 1;
        if (p % 3 == 1) return (u64)k + 1;
        return (k % 2 == 0) ? 1 : 0;  // p = 2 or p = 2 mod 3
    });
}

u64 f2(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 2) return 1;
        if (p % 4 == 1) return (u64)k + 1;
        return (k % 2 == 0) ? 1 : 0;  // p = 3 mod 4
    });
}

u64 f3(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 2) return 2 * (u64)k - 1;
        return (u64)k + 1;
    });
}

u64 f4(u64 n) { return f3(n); }
u64 f8(u64 n) { return f3(n); }

u64 f5(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 3) return 1;
        return (k % 2 == 0) ? 1 : 0;
    });
}

u64 f6(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 2) return 1;
        return (k % 2 == 0) ? 1 : 0;
    });
}

u64 g(u64 n) {
    u64 s = 0;
    for (u64 d : divisors(n)) s += (d % 2 == 0) ? 2 : 1;
    u64 via_tau = 2 * tau(n) - tau(odd_part(n));
    if (s != via_tau) throw formula_defect("g(n): divisor sum and 2*tau - tau(odd part) disagree");
    return s;
}

u64 g1_published(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 2) {
            u64 pk2 = u64(1) << (k + 2);
            if (k % 2 == 0) return 2 * (pk2 - 1) / 3;
            return (2 * pk2 - 1) / 3;  // (2^{k+3} - 1)/3
        }
        // odd p: (p^{k+2}-1)/(p^2-1) for even k, p (p^{k+1}-1)/(p^2-1) for odd k
        u64 num = 1;
        if (k % 2 == 0) {
            for (int i = 0; i < k + 2; ++i) num = checked_mul(num, p);
            return (num - 1) / (p * p - 1);
        }
        for (int i = 0; i < k + 1; ++i) num = checked_mul(num, p);
        return checked_mul(p, (num - 1) / (p * p - 1));
    });
}

u64 g2_published(u64 n) {
    return multiplicative(n, [](u64 p, int k) -> u64 {
        if (p == 3) return (u64)k + 2;
        if (p == 2) return (k % 2 == 0) ? (u64)k + 2 : (u64)k;
        return (k % 2 == 0) ? (u64)k + 2 : (u64)k + 1;
    });
}

u64 h(u64 n) { return norm_square_divisor_sum(rho7(), n); }

u64 alpha(u64 n) { return f4(n) - h(n); }

int64_t lambda27(u64 n) {
    i64 gv = (i64)g(n), f6v = (i64)f6(n);
    i64 first = gv - f6v;
    i64 second = (i64)sigma(n) - gv - (i64)f4(n) - (i64)f2(n) + 2 * f6v;
    if (first % 2 != 0 || second % 2 != 0)
        throw formula_defect("lambda27: half-sum is not an integer at n=" + std::to_string(n));
    i64 val = first / 2 + second / 2;
    if (val < 0)
        throw formula_defect("lambda27: negative value at n=" + std::to_string(n));
    return val;
}

int64_t lambda27_geometric(u64 n) {
    i64 gv = (i64)g(n), hv = (i64)h(n);
    i64 first = gv - hv;
    i64 second = (i64)sigma(n) - gv - (i64)f2(n) - (i64)f4(n) + 2 * hv;
    if (first % 2 != 0 || second % 4 != 0)
        throw formula_defect("lambda27_geometric: integrality failure at n=" + std::to_string(n));
    i64 val = first / 2 + second / 4;
    if (val < 0)
        throw formula_defect("lambda27_geometric: negative value at n=" + std::to_string(n));
    return val;
}

}  // namespace tumap::numtheory
