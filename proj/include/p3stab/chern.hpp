#ifndef P3STAB_CHERN_HPP
#define P3STAB_CHERN_HPP

#include <array>
#include <string_view>

#include "p3stab/poly.hpp"
#include "p3stab/rational.hpp"

namespace p3stab {

/// Unconstrained rational 4-vector; twisted characters live here.
using QVec = std::array<Rational, 4>;

struct HalfPlanePoint {
    Rational beta;
    Rational a; // alpha^2, so every curve is polynomial over Q

    HalfPlanePoint(Rational beta_, Rational a_) : beta(std::move(beta_)), a(std::move(a_)) {
        if (a <= 0) fail("MalformedRational", "half-plane point needs a = alpha^2 > 0");
    }
};

/// Point of the lattice Z + Z + (1/2)Z + (1/6)Z: the vector
/// (ch0*H^3, ch1*H^2, ch2*H, ch3) of a bounded complex on P^3.
class ChernCharacter {
public:
    ChernCharacter() : v_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    ChernCharacter(Rational v0, Rational v1, Rational v2, Rational v3);

    const Rational& operator[](int i) const { return v_.at(static_cast<size_t>(i)); }
    const QVec& vec() const { return v_; }

    bool is_zero() const;

    ChernCharacter operator+(const ChernCharacter& o) const;
    ChernCharacter operator-(const ChernCharacter& o) const;
    ChernCharacter operator-() const;
    ChernCharacter scaled(const Integer& k) const;

    bool operator==(const ChernCharacter& o) const { return v_ == o.v_; }
    bool operator!=(const ChernCharacter& o) const { return v_ != o.v_; }

private:
    QVec v_;
};

/// ch(O(k)) = exp(kH).
ChernCharacter line_bundle(long k);

/// Four comma-separated rational literals; spaces tolerated.
ChernCharacter parse_character(std::string_view text);

std::string to_string(const ChernCharacter& v);

struct TwistedCharacter {
    QVec ch;
    Rational beta;
};

/// ch^beta, the character twisted by the formal beta-th power of O(1).
QVec twist(const QVec& v, const Rational& beta);
TwistedCharacter twist(const ChernCharacter& v, const Rational& beta);

/// Multiplication by exp(kH); stays on the lattice.
ChernCharacter tensor_line(const ChernCharacter& v, long k);

/// Character of the shifted derived dual RHom(-, O)[2]: (v0, -v1, v2, -v3).
ChernCharacter dual(const ChernCharacter& v);

/// delta_ij(v, w) = ch_i(v) ch_j(w) - ch_j(v) ch_i(w), for 0 <= j < i <= 3.
Rational delta(int i, int j, const ChernCharacter& v, const ChernCharacter& w);
Rational delta(int i, int j, const QVec& v, const QVec& w);

/// Bogomolov discriminant ch1^2 - 2 ch0 ch2 (twist-invariant).
Rational q_tilt(const ChernCharacter& v);

/// Generalized Bogomolov form
/// (ch1^2 - 2 ch0 ch2) a + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta.
Rational q_bmt(const ChernCharacter& v, const HalfPlanePoint& p);

struct HilbertPolynomial {
    Rational c3, c2, c1, c0; // P(n) = c3 n^3 + c2 n^2 + c1 n + c0

    Rational eval(const Rational& n) const {
        return ((c3 * n + c2) * n + c1) * n + c0;
    }
    Poly to_poly() const;
};

/// Euler characteristic polynomial chi(E(n)), computed by Riemann-Roch
/// with the Todd class (1, 2H, 11/6 H^2, H^3) of P^3.
HilbertPolynomial hilbert_polynomial(const ChernCharacter& v);

/// 3 minus the index of the first nonvanishing component; -1 for zero.
int numerical_dimension(const ChernCharacter& v);

/// Monic truncation of the Hilbert polynomial keeping degrees d-k..d,
/// divided by the leading coefficient. Requires 1 <= k <= d.
Poly reduced_hilbert(const ChernCharacter& v, int k);

} // namespace p3stab

#endif
