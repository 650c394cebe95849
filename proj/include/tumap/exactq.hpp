// Exact arithmetic in Q and Q[sqrt(3)], the coordinate field of every
// builtin tiling.  Comparisons are exact; doubles appear only on explicit
// request (angle sorting).
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tumap::tilings {

namespace detail {
inline int64_t narrow_q(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return (int64_t)v;
}
}  // namespace detail

struct Rational {
    int64_t num = 0;
    int64_t den = 1;  // > 0 always

    Rational() = default;
    Rational(int64_t n) : num(n), den(1) {}
    Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    Rational operator+(const Rational& o) const {
        __int128 n = (__int128)num * o.den + (__int128)o.num * den;
        __int128 d = (__int128)den * o.den;
        return reduced(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = (__int128)num * o.den - (__int128)o.num * den;
        __int128 d = (__int128)den * o.den;
        return reduced(n, d);
    }
    Rational operator*(const Rational& o) const {
        return reduced((__int128)num * o.num, (__int128)den * o.den);
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("Rational: division by zero");
        return reduced((__int128)num * o.den, (__int128)den * o.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    int sign() const { return num == 0 ? 0 : (num > 0 ? 1 : -1); }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    static Rational reduced(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 x = n < 0 ? -n : n, y = d;
        while (y) {
            __int128 t = x % y;
            x = y;
            y = t;
        }
        if (x > 1) {
            n /= x;
            d /= x;
        }
        Rational r;
        r.num = detail::narrow_q(n, "Rational overflow");
        r.den = detail::narrow_q(d, "Rational overflow");
        return r;
    }
};

// q = a + b * sqrt(3)
struct Quad {
    Rational a, b;

    Quad() = default;
    Quad(int64_t n) : a(n), b(0) {}
    Quad(Rational ra) : a(ra), b(0) {}
    Quad(Rational ra, Rational rb) : a(ra), b(rb) {}

    bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Quad& o) const { return !(*this == o); }

    Quad operator+(const Quad& o) const { return {a + o.a, b + o.b}; }
    Quad operator-(const Quad& o) const { return {a - o.a, b - o.b}; }
    Quad operator-() const { return {-a, -b}; }
    Quad operator*(const Quad& o) const {
        return {a * o.a + Rational(3) * (b * o.b), a * o.b + b * o.a};
    }
    Quad operator/(const Quad& o) const {
        // multiply by conjugate: 1/(a + b r3) = (a - b r3)/(a^2 - 3 b^2)
        Rational denom = o.a * o.a - Rational(3) * (o.b * o.b);
        if (denom.sign() == 0) throw std::domain_error("Quad: division by zero");
        Quad num = (*this) * Quad{o.a, -o.b};
        return {num.a / denom, num.b / denom};
    }

    bool is_zero() const { return a.sign() == 0 && b.sign() == 0; }
    bool is_rational() const { return b.sign() == 0; }
    bool is_integer() const { return b.sign() == 0 && a.is_integer(); }

    // exact sign of a + b sqrt(3)
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with 3 b^2
        Rational lhs = a * a, rhs = Rational(3) * (b * b);
        Rational diff = lhs - rhs;
        if (diff.sign() == 0) return 0;
        return diff.sign() > 0 ? sa : sb;
    }
    bool operator<(const Quad& o) const { return (*this - o).sign() < 0; }

    double to_double() const { return a.to_double() + b.to_double() * std::sqrt(3.0); }

    // largest integer <= value, exact
    int64_t floor() const {
        double approx = to_double();
        int64_t f = (int64_t)std::floor(approx + 0.5) - 1;  // start safely below
        while ((*this - Quad(f + 1)).sign() >= 0) ++f;
        while ((*this - Quad(f)).sign() < 0) --f;
        return f;
    }

    std::string str() const {
        if (b.sign() == 0) return a.str();
        return a.str() + "+" + b.str() + "*r3";
    }
};

inline Quad qint(int64_t n) { return Quad(n); }
inline Quad qr(int64_t n, int64_t d) { return Quad(Rational(n, d)); }
// (p/q) + (r/s) sqrt(3)
inline Quad quad(int64_t p, int64_t q, int64_t r, int64_t s) {
    return Quad(Rational(p, q), Rational(r, s));
}

struct QuadPoint {
    Quad x, y;
    bool operator==(const QuadPoint& o) const = default;
    QuadPoint operator+(const QuadPoint& o) const { return {x + o.x, y + o.y}; }
    QuadPoint operator-(const QuadPoint& o) const { return {x - o.x, y - o.y}; }
};

inline Quad dist2(const QuadPoint& p, const QuadPoint& q) {
    Quad dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

// 2x2 matrix over Q[sqrt(3)], column-major meaning as in IntMatrix2
struct QuadMat {
    Quad m11, m12, m21, m22;

    QuadPoint apply(const QuadPoint& p) const {
        return {m11 * p.x + m12 * p.y, m21 * p.x + m22 * p.y};
    }
    QuadMat operator*(const QuadMat& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    Quad det() const { return m11 * m22 - m12 * m21; }
    QuadMat inverse() const {
        Quad dv = det();
        if (dv.is_zero()) throw std::domain_error("QuadMat: singular");
        return {m22 / dv, (-m12) / dv, (-m21) / dv, m11 / dv};
    }
};

}  // namespace tumap::tilings
