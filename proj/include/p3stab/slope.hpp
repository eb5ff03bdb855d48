#ifndef P3STAB_SLOPE_HPP
#define P3STAB_SLOPE_HPP

#include "p3stab/chern.hpp"

namespace p3stab {

enum class Ordering { Less, Equal, Greater };

inline Ordering reverse(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

inline Ordering ordering_of_sign(int s) {
    return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

/// A rational slope value or +infinity (vanishing imaginary part, treated
/// as maximal).
class ExtendedRational {
public:
    static ExtendedRational infinity() { return ExtendedRational(true, Rational(0)); }
    static ExtendedRational finite(Rational v) { return ExtendedRational(false, std::move(v)); }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const {
        if (infinite_) fail("MalformedRational", "no finite value of +infinity");
        return value_;
    }

    friend Ordering compare(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.infinite_ && b.infinite_) return Ordering::Equal;
        if (a.infinite_) return Ordering::Greater;
        if (b.infinite_) return Ordering::Less;
        return a.value_ < b.value_ ? Ordering::Less
                                   : (a.value_ == b.value_ ? Ordering::Equal : Ordering::Greater);
    }

    bool operator==(const ExtendedRational& o) const {
        return compare(*this, o) == Ordering::Equal;
    }

private:
    ExtendedRational(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    Rational value_;
};

std::string to_string(const ExtendedRational& x);

struct StabilityParam {
    Rational value;
    explicit StabilityParam(Rational v) : value(std::move(v)) {
        if (value <= 0) fail("MalformedRational", "stability parameter s must be positive");
    }
};

/// Classical slope ch1/ch0, +infinity on torsion.
ExtendedRational mu(const ChernCharacter& v);

/// Tilt slope (ch2^beta - a/2 ch0) / ch1^beta.
ExtendedRational nu(const ChernCharacter& v, const HalfPlanePoint& p);

/// Slope of the full central charge with real part
/// -ch3^beta + (s + 1/6) a ch1^beta and imaginary part ch2^beta - a/2 ch0.
ExtendedRational lambda(const ChernCharacter& v, const HalfPlanePoint& p,
                        const StabilityParam& s);

Ordering compare_lambda(const ChernCharacter& v, const ChernCharacter& u,
                        const HalfPlanePoint& p, const StabilityParam& s);

/// Which shift of a mu- and nu-semistable object of character v lands in the
/// double-tilted heart at p: 0, 1 or 2. Requires ch0 != 0.
int region_classify(const ChernCharacter& v, const HalfPlanePoint& p);

} // namespace p3stab

#endif
