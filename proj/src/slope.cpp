#include "p3stab/slope.hpp"

namespace p3stab {

std::string to_string(const ExtendedRational& x) {
    return x.is_infinite() ? "inf" : to_string(x.value());
}

namespace {

ExtendedRational ratio(const Rational& num, const Rational& den) {
    if (den == 0) return ExtendedRational::infinity();
    return ExtendedRational::finite(num / den);
}

void require_nonzero(const ChernCharacter& v) {
    if (v.is_zero()) fail("ZeroCharacter", "slope of the zero character");
}

} // namespace

ExtendedRational mu(const ChernCharacter& v) {
    require_nonzero(v);
    return ratio(v[1], v[0]);
}

ExtendedRational nu(const ChernCharacter& v, const HalfPlanePoint& p) {
    require_nonzero(v);
    QVec t = twist(v.vec(), p.beta);
    return ratio(t[2] - p.a * v[0] / 2, t[1]);
}

ExtendedRational lambda(const ChernCharacter& v, const HalfPlanePoint& p,
                        const StabilityParam& s) {
    require_nonzero(v);
    QVec t = twist(v.vec(), p.beta);
    Rational sigma = s.value + Rational(1, 6);
    return ratio(t[3] - sigma * p.a * t[1], t[2] - p.a * v[0] / 2);
}

Ordering compare_lambda(const ChernCharacter& v, const ChernCharacter& u,
                        const HalfPlanePoint& p, const StabilityParam& s) {
    return compare(lambda(v, p, s), lambda(u, p, s));
}

int region_classify(const ChernCharacter& v, const HalfPlanePoint& p) {
    require_nonzero(v);
    if (v[0] == 0)
        fail("RankZero", "region classifier needs ch0 != 0; use the ch1-based test instead");
    // Left of the vertical line beta = mu: the object itself sits in the
    // once-tilted heart; to the right its shift by one does.
    bool left = p.beta < v[1] / v[0];
    if (left) {
        Ordering nu_sign = compare(nu(v, p), ExtendedRational::finite(Rational(0)));
        return nu_sign == Ordering::Greater ? 0 : 1;
    }
    Ordering nu_sign = compare(nu(-v, p), ExtendedRational::finite(Rational(0)));
    return nu_sign == Ordering::Greater ? 1 : 2;
}

} // namespace p3stab
