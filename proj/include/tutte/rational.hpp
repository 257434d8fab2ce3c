#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "tutte/errors.hpp"

namespace tutte {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical lowest terms with a
/// positive denominator by the backing type.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2_int(std::uint64_t k) { return BigInt(1) << k; }

inline Rational pow2_rational(std::int64_t k) {
    if (k >= 0) return Rational(pow2_int(static_cast<std::uint64_t>(k)));
    return Rational(1, pow2_int(static_cast<std::uint64_t>(-k)));
}

/// base^e for integer e; negative exponents require base != 0.
inline Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e == 0) return Rational(1);  // 0^0 = 1 by the subset-expansion convention
    if (base == 0) {
        if (e < 0) throw ParameterError("rational_pow: zero base with negative exponent");
        return Rational(0);
    }
    const std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    BigInt num = boost::multiprecision::pow(numerator(base), static_cast<unsigned>(n));
    BigInt den = boost::multiprecision::pow(denominator(base), static_cast<unsigned>(n));
    if (e < 0) return Rational(den, num);
    return Rational(num, den);
}

inline BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && numerator(r) % denominator(r) != 0) --q;
    return q;
}

inline BigInt ceil_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && numerator(r) % denominator(r) != 0) ++q;
    return q;
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Parses `p` or `p/q` with optional leading minus signs.
inline Rational parse_rational(std::string_view s) {
    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw InputError("empty integer token");
        std::size_t i = 0;
        if (t[0] == '-' || t[0] == '+') i = 1;
        if (i == t.size()) throw InputError("sign without digits in rational");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw InputError("bad rational token: " + std::string(t));
        return BigInt(std::string(t));
    };
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in rational: " + std::string(s));
    return Rational(num, den);
}

/// Canonical `p` / `p/q` form (lowest terms, denominator omitted when 1).
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Fixed-point decimal with `digits` fractional digits.  Rounds toward
/// minus infinity when round_down, else toward plus infinity, so interval
/// endpoints stay outward when printed.
inline std::string to_decimal_string(const Rational& r, unsigned digits, bool round_down) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    Rational scaled = r * Rational(scale);
    BigInt v = round_down ? floor_rational(scaled) : ceil_rational(scaled);
    bool neg = v < 0;
    BigInt a = neg ? BigInt(-v) : v;
    std::string s = a.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

}  // namespace tutte
