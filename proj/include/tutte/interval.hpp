#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "tutte/errors.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Closed interval with exact rational endpoints.  All arithmetic here is
/// exact, so enclosures only widen where an irrational value enters (roots
/// and the exp/ln series below); rational inputs stay points.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw ParameterError("interval endpoints out of order");
    }

    static Interval point(Rational v) { return Interval(v, v); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator*(const Rational& s, const Interval& a) {
    if (s >= 0) return Interval(s * a.lo, s * a.hi);
    return Interval(s * a.hi, s * a.lo);
}

inline Interval operator/(const Interval& a, const Rational& d) {
    if (d == 0) throw ParameterError("interval division by zero");
    if (d > 0) return Interval(a.lo / d, a.hi / d);
    return Interval(a.hi / d, a.lo / d);
}

/// Reciprocal of an interval not containing zero.
inline Interval reciprocal(const Interval& a) {
    if (a.lo <= 0 && a.hi >= 0) throw ParameterError("interval reciprocal across zero");
    return Interval(Rational(1) / a.hi, Rational(1) / a.lo);
}

/// a^e for a nonnegative interval (monotone power).
inline Interval pow_nonneg(const Interval& a, std::uint64_t e) {
    if (a.lo < 0) throw ParameterError("pow_nonneg requires a nonnegative interval");
    if (e == 0) return Interval::point(Rational(1));
    Interval acc = Interval::point(Rational(1));
    Interval base = a;
    std::uint64_t k = e;
    while (k) {
        if (k & 1) acc = Interval(acc.lo * base.lo, acc.hi * base.hi);
        base = Interval(base.lo * base.lo, base.hi * base.hi);
        k >>= 1;
    }
    return acc;
}

/// floor(x^{1/n}) for x >= 0, n >= 1, by guarded Newton iteration.
inline BigInt integer_nth_root(const BigInt& x, unsigned n) {
    if (x < 0) throw ParameterError("integer_nth_root of negative value");
    if (n == 0) throw ParameterError("integer_nth_root with n = 0");
    if (x == 0 || x == 1 || n == 1) return x;
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    BigInt r = BigInt(1) << ((bits + n - 1) / n);  // upper start
    while (true) {
        BigInt rp = boost::multiprecision::pow(r, n - 1);
        BigInt next = ((n - 1) * r + x / rp) / n;
        if (next >= r) break;
        r = next;
    }
    while (boost::multiprecision::pow(r, n) > x) --r;
    while (boost::multiprecision::pow(r + 1, n) <= x) ++r;
    return r;
}

/// Enclosure of 2^{num/den} with dyadic endpoints of width 2^-precision_bits
/// (an exact point when den divides num).
inline Interval pow2_enclosure(std::int64_t num, std::int64_t den, unsigned precision_bits) {
    if (den == 0) throw ParameterError("pow2_enclosure with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0) return reciprocal(pow2_enclosure(-num, den, precision_bits));
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den == 1) return Interval::point(pow2_rational(num));
    // 2^{u/v} = integer v-th root of 2^{u + p v}, scaled by 2^-p.
    const std::uint64_t p = precision_bits;
    BigInt arg = BigInt(1) << (static_cast<std::uint64_t>(num) + p * static_cast<std::uint64_t>(den));
    BigInt root = integer_nth_root(arg, static_cast<unsigned>(den));
    const BigInt scale = BigInt(1) << p;
    if (boost::multiprecision::pow(root, static_cast<unsigned>(den)) == arg)
        return Interval::point(Rational(root, scale));
    return Interval(Rational(root, scale), Rational(root + 1, scale));
}

namespace detail {

// 2 * atanh(t) = 2 * sum_{j>=0} t^{2j+1}/(2j+1) for 0 < t < 1/2, with the
// geometric tail bound added to the upper endpoint.
inline Interval two_atanh_enclosure(const Rational& t, unsigned precision_bits) {
    const Rational eps = pow2_rational(-static_cast<std::int64_t>(precision_bits) - 2);
    const Rational t2 = t * t;
    Rational sum = 0;
    Rational term = t;  // t^{2j+1}
    std::uint64_t j = 0;
    while (true) {
        sum += term / Rational(2 * j + 1);
        term *= t2;
        ++j;
        // remaining <= term/(2j+1) * 1/(1-t^2)
        Rational tail = term / Rational(2 * j + 1) / (Rational(1) - t2);
        if (tail < eps) {
            return Interval(2 * sum, 2 * (sum + tail));
        }
    }
}

}  // namespace detail

/// Enclosure of ln(y) for rational y > 0.
inline Interval ln_enclosure(Rational y, unsigned precision_bits) {
    if (y <= 0) throw ParameterError("ln_enclosure requires a positive argument");
    if (y == 1) return Interval::point(Rational(0));
    if (y < 1) {
        Interval pos = ln_enclosure(Rational(1) / y, precision_bits);
        return Interval(-pos.hi, -pos.lo);
    }
    // Reduce to [1,2) by pulling out powers of two: ln y = k ln 2 + ln y'.
    std::int64_t k = 0;
    while (y >= 2) {
        y /= 2;
        ++k;
    }
    Interval result = Interval::point(Rational(0));
    if (k > 0) {
        Interval ln2 = detail::two_atanh_enclosure(Rational(1, 3), precision_bits + 2);
        result = Rational(k) * ln2;
    }
    if (y > 1) {
        Rational t = (y - 1) / (y + 1);  // in (0, 1/3)
        result = result + detail::two_atanh_enclosure(t, precision_bits + 2);
    }
    return result;
}

/// Enclosure of e^x for rational x with |x| <= 16, by the Taylor series with
/// an explicit remainder bound.
inline Interval exp_enclosure(const Rational& x, unsigned precision_bits) {
    if (x == 0) return Interval::point(Rational(1));
    if (x < 0) return reciprocal(exp_enclosure(-x, precision_bits));
    if (x > 16) throw ParameterError("exp_enclosure argument too large");
    const Rational eps = pow2_rational(-static_cast<std::int64_t>(precision_bits) - 2);
    Rational sum = 1;
    Rational term = 1;  // x^k / k!
    std::uint64_t k = 0;
    while (true) {
        ++k;
        term *= x / Rational(k);
        sum += term;
        if (x < Rational(k + 1)) {
            // remaining <= term * (x/(k+1)) / (1 - x/(k+1))
            Rational ratio = x / Rational(k + 1);
            Rational tail = term * ratio / (Rational(1) - ratio);
            if (tail < eps) return Interval(sum, sum + tail);
        }
    }
}

}  // namespace tutte
