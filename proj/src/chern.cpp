#include "p3stab/chern.hpp"

#include <vector>

namespace p3stab {

ChernCharacter::ChernCharacter(Rational v0, Rational v1, Rational v2, Rational v3)
    : v_{std::move(v0), std::move(v1), std::move(v2), std::move(v3)} {
    if (!is_integer(v_[0]))
        fail("DenominatorViolation", "ch0*H^3 must be an integer, got " + to_string(v_[0]));
    if (!is_integer(v_[1]))
        fail("DenominatorViolation", "ch1*H^2 must be an integer, got " + to_string(v_[1]));
    if (!is_integer(Rational(2 * v_[2])))
        fail("DenominatorViolation", "ch2*H must be a half-integer, got " + to_string(v_[2]));
    if (!is_integer(Rational(6 * v_[3])))
        fail("DenominatorViolation", "ch3 must be a sixth-integer, got " + to_string(v_[3]));
}

bool ChernCharacter::is_zero() const {
    return v_[0] == 0 && v_[1] == 0 && v_[2] == 0 && v_[3] == 0;
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
    return {v_[0] + o.v_[0], v_[1] + o.v_[1], v_[2] + o.v_[2], v_[3] + o.v_[3]};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
    return {v_[0] - o.v_[0], v_[1] - o.v_[1], v_[2] - o.v_[2], v_[3] - o.v_[3]};
}

ChernCharacter ChernCharacter::operator-() const {
    return {-v_[0], -v_[1], -v_[2], -v_[3]};
}

ChernCharacter ChernCharacter::scaled(const Integer& k) const {
    Rational kk(k);
    return {kk * v_[0], kk * v_[1], kk * v_[2], kk * v_[3]};
}

ChernCharacter line_bundle(long k) { return tensor_line(ChernCharacter(1, 0, 0, 0), k); }

ChernCharacter parse_character(std::string_view text) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 4)
        fail("MalformedRational",
             "expected four comma-separated rationals, got '" + std::string(text) + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
            parse_rational(parts[3])};
}

std::string to_string(const ChernCharacter& v) {
    return to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "," + to_string(v[3]);
}

QVec twist(const QVec& v, const Rational& beta) {
    Rational b2 = beta * beta;
    return {v[0],
            v[1] - beta * v[0],
            v[2] - beta * v[1] + b2 * v[0] / 2,
            v[3] - beta * v[2] + b2 * v[1] / 2 - b2 * beta * v[0] / 6};
}

TwistedCharacter twist(const ChernCharacter& v, const Rational& beta) {
    return {twist(v.vec(), beta), beta};
}

ChernCharacter tensor_line(const ChernCharacter& v, long k) {
    QVec t = twist(v.vec(), Rational(-k));
    return {t[0], t[1], t[2], t[3]};
}

ChernCharacter dual(const ChernCharacter& v) { return {v[0], -v[1], v[2], -v[3]}; }

Rational delta(int i, int j, const QVec& v, const QVec& w) {
    if (j < 0 || i > 3 || j >= i) fail("IndexOutOfRange", "delta needs 0 <= j < i <= 3");
    auto ii = static_cast<size_t>(i), jj = static_cast<size_t>(j);
    return v[ii] * w[jj] - v[jj] * w[ii];
}

Rational delta(int i, int j, const ChernCharacter& v, const ChernCharacter& w) {
    return delta(i, j, v.vec(), w.vec());
}

Rational q_tilt(const ChernCharacter& v) { return v[1] * v[1] - 2 * v[0] * v[2]; }

Rational q_bmt(const ChernCharacter& v, const HalfPlanePoint& p) {
    QVec t = twist(v.vec(), p.beta);
    return (v[1] * v[1] - 2 * v[2] * v[0]) * p.a + 4 * t[2] * t[2] - 6 * t[1] * t[3];
}

HilbertPolynomial hilbert_polynomial(const ChernCharacter& v) {
    HilbertPolynomial h;
    h.c3 = v[0] / 6;
    h.c2 = (v[1] + 2 * v[0]) / 2;
    h.c1 = v[2] + 2 * v[1] + Rational(11, 6) * v[0];
    h.c0 = v[3] + 2 * v[2] + Rational(11, 6) * v[1] + v[0];
    return h;
}

Poly HilbertPolynomial::to_poly() const {
    Poly p{c0, c1, c2, c3};
    poly_trim(p);
    return p;
}

int numerical_dimension(const ChernCharacter& v) {
    for (int i = 0; i < 4; ++i)
        if (v[i] != 0) return 3 - i;
    return -1;
}

Poly reduced_hilbert(const ChernCharacter& v, int k) {
    int d = numerical_dimension(v);
    if (d < 0) fail("ZeroCharacter", "reduced Hilbert polynomial of the zero character");
    if (k < 1 || k > d)
        fail("KOutOfRange", "k must satisfy 1 <= k <= " + std::to_string(d));
    Poly p = hilbert_polynomial(v).to_poly();
    // deg P = d: the leading coefficient is a positive multiple of the first
    // nonvanishing component.
    Poly out(static_cast<size_t>(d) + 1, Rational(0));
    const Rational& lead = p[static_cast<size_t>(d)];
    for (int i = d - k; i <= d; ++i)
        out[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] / lead;
    poly_trim(out);
    return out;
}

} // namespace p3stab
