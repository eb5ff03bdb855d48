#include "p3stab/rational.hpp"

#include <algorithm>
#include <cctype>

namespace p3stab {

std::string to_string(const Rational& r) { return r.str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

// Grammar: optional sign, digits, optional "/" digits.
Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail("MalformedRational", "empty rational literal");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num_part = s, den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
        if (!all_digits(den_part))
            fail("MalformedRational", "bad denominator in '" + std::string(text) + "'");
    }
    if (!all_digits(num_part))
        fail("MalformedRational", "bad rational literal '" + std::string(text) + "'");
    Integer p{std::string(num_part)};
    Integer q = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
    if (q == 0) fail("MalformedRational", "zero denominator in '" + std::string(text) + "'");
    if (negative) p = -p;
    return make_rational(p, q);
}

// Fixed-point decimal literal, e.g. "-1.75" -> -7/4.  Used to read back the
// figure output, which keeps that path exact.
Rational parse_decimal(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail("MalformedRational", "empty decimal literal");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view int_part = s, frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
        if (!all_digits(frac_part))
            fail("MalformedRational", "bad decimal literal '" + std::string(text) + "'");
    }
    if (!all_digits(int_part))
        fail("MalformedRational", "bad decimal literal '" + std::string(text) + "'");
    Integer p{std::string(int_part)};
    Integer q(1);
    if (!frac_part.empty()) {
        q = pow10_int(static_cast<int>(frac_part.size()));
        p = p * q + Integer{std::string(frac_part)};
    }
    if (negative) p = -p;
    return make_rational(p, q);
}

namespace {

// x <=> 10^e, exactly.  x must be positive.
int cmp_pow10(const Rational& x, int e) {
    const Integer &p = num(x), &q = den(x);
    Integer lhs = p, rhs = q;
    if (e >= 0) rhs *= pow10_int(e);
    else lhs *= pow10_int(-e);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

// Largest e with 10^e <= x; x positive.
int exponent10(const Rational& x) {
    auto digit_count = [](const Integer& n) {
        return static_cast<int>(n.str().size());
    };
    int e = digit_count(num(x)) - digit_count(den(x));
    while (cmp_pow10(x, e) < 0) --e;
    while (cmp_pow10(x, e + 1) >= 0) ++e;
    return e;
}

std::string render_digits(const Integer& mantissa, int sig, int e, bool negative) {
    std::string digits = mantissa.str();
    std::string out;
    if (e >= sig - 1) {
        out = digits + std::string(static_cast<size_t>(e - sig + 1), '0');
    } else if (e >= 0) {
        out = digits.substr(0, static_cast<size_t>(e + 1)) + "." +
              digits.substr(static_cast<size_t>(e + 1));
    } else {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
    }
    return negative ? "-" + out : out;
}

} // namespace

// `sig_digits` significant digits of x, fixed notation, round half up.
std::string decimal_sig(const Rational& x, int sig_digits) {
    if (x == 0) return "0";
    bool negative = x < 0;
    Rational ax = rat_abs(x);
    int e = exponent10(ax);
    // mantissa = round(ax * 10^(sig-1-e)), a sig_digits-digit integer
    Integer p = num(ax), q = den(ax);
    int shift = sig_digits - 1 - e;
    if (shift >= 0) p *= pow10_int(shift);
    else q *= pow10_int(-shift);
    Integer m = (2 * p + q) / (2 * q);
    if (m == pow10_int(sig_digits)) { // rounded across a power of ten
        m = pow10_int(sig_digits - 1);
        ++e;
    }
    return render_digits(m, sig_digits, e, negative);
}

// sqrt(x) to `sig_digits` significant digits.  Digits are extracted from
// exact integer square roots with guard digits, never from floating point.
std::string sqrt_decimal_sig(const Rational& x, int sig_digits) {
    if (x < 0) fail("MalformedRational", "sqrt of negative value");
    if (x == 0) return "0";
    // exponent of sqrt(x): 10^e <= sqrt(x) < 10^(e+1)  <=>  10^(2e) <= x < 10^(2e+2)
    int ea = exponent10(x);
    int e = ea >= 0 ? ea / 2 : -((-ea + 1) / 2);
    while (cmp_pow10(x, 2 * e) < 0) --e;
    while (cmp_pow10(x, 2 * (e + 1)) >= 0) ++e;

    const int guard = 8;
    int t = sig_digits - 1 - e + guard;
    // sqrt(p/q)*10^t = sqrt(p*q*10^(2t))/q; t may be negative for huge x
    Integer p = num(x), q = den(x);
    Integer scaled;
    if (t >= 0) scaled = p * q * pow10_int(2 * t);
    else {
        Integer d = pow10_int(-t);
        scaled = p * q / (d * d); // floor; guard digits absorb the loss
    }
    Integer r = isqrt_nearest(scaled);
    Integer denom = q * pow10_int(guard);
    Integer m = (2 * r + denom) / (2 * denom);
    if (m == pow10_int(sig_digits)) {
        m = pow10_int(sig_digits - 1);
        ++e;
    }
    return render_digits(m, sig_digits, e, false);
}

} // namespace p3stab
