#ifndef P3STAB_RATIONAL_HPP
#define P3STAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "p3stab/errors.hpp"

namespace p3stab {

using Integer = boost::multiprecision::cpp_int;

/// Exact arithmetic-never-rounds rational. Canonical form (reduced,
/// positive denominator) is maintained by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) fail("MalformedRational", "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }

inline Integer floor_int(const Rational& r) {
    Integer p = num(r), q = den(r);
    if (p >= 0) return p / q;
    return -((-p + q - 1) / q);
}

inline Integer ceil_int(const Rational& r) { return -floor_int(-r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline Integer pow10_int(int k) {
    Integer p(1);
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

/// Floor of the integer square root; input must be nonnegative.
inline Integer isqrt(const Integer& n) {
    if (n < 0) fail("MalformedRational", "isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

/// Nearest integer to sqrt(n) (ties round up).
inline Integer isqrt_nearest(const Integer& n) {
    Integer r = isqrt(n);
    if ((2 * r + 1) * (2 * r + 1) <= 4 * n) ++r;
    return r;
}

inline bool is_perfect_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/// Exact square root when the reduced rational is a perfect square.
inline bool rational_sqrt(const Rational& r, Rational* out) {
    if (r < 0) return false;
    Integer sp, sq;
    if (!is_perfect_square(num(r), &sp) || !is_perfect_square(den(r), &sq)) return false;
    if (out) *out = make_rational(sp, sq);
    return true;
}

/// sqrt(r) to `digits` decimal digits, as an exact rational m / 10^digits.
inline Rational approx_sqrt_rational(const Rational& r, int digits) {
    if (r < 0) fail("MalformedRational", "sqrt of negative value");
    if (r == 0) return Rational(0);
    Integer p = num(r), q = den(r);
    // sqrt(p/q) * 10^d = sqrt(p*q*10^(2d)) / q
    Integer m = isqrt_nearest(p * q * pow10_int(2 * digits));
    return make_rational(m, q * pow10_int(digits)); // residual /q error < 1 ulp
}

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
Rational parse_decimal(std::string_view text);
std::string decimal_sig(const Rational& x, int sig_digits);
std::string sqrt_decimal_sig(const Rational& x, int sig_digits);

} // namespace p3stab

#endif
