#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace symlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_numerator(const Rat& v) { return boost::multiprecision::numerator(v); }
inline Int int_denominator(const Rat& v) { return boost::multiprecision::denominator(v); }

inline bool is_integral(const Rat& v) { return int_denominator(v) == 1; }

/// binomial(n, k) with binomial(n, k) = 0 outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int catalan(long n) {
    if (n < 0) return 0;
    return binomial(2 * n, n) / (n + 1);
}

inline Int pow2(long n) {
    if (n < 0) throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << static_cast<unsigned>(n);
}

inline Int pow_int(const Int& base, long exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/// Floor of the integer square root.
inline Int isqrt_floor(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(v);
}

/// Decimal rendering of an exact rational, truncated toward zero.
inline std::string decimal_string(const Rat& v, unsigned digits) {
    Int num = int_numerator(v);
    const Int den = int_denominator(v);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    out += Int(num / den).str();
    if (digits == 0) return out;
    out += '.';
    Int rem = num % den;
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(Int(rem / den)));
        rem %= den;
    }
    return out;
}

/// "p/q" for non-integers, plain integer string otherwise.
inline std::string rational_string(const Rat& v) {
    if (is_integral(v)) return int_numerator(v).str();
    return int_numerator(v).str() + "/" + int_denominator(v).str();
}

}  // namespace symlat
