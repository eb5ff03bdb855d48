#ifndef P3STAB_ASYMPTOTICS_HPP
#define P3STAB_ASYMPTOTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "p3stab/slope.hpp"

namespace p3stab {

enum class Side { LeftInfinity, RightInfinity };

/// Germ of an unbounded curve a(beta) = c_gamma * beta^2 heading to one of
/// the two infinities; c_gamma = lim alpha^2/beta^2 must stay below 1.
struct CurveClass {
    Side side;
    Rational c_gamma;

    CurveClass(Side side_, Rational c) : side(side_), c_gamma(std::move(c)) {
        if (c_gamma < 0 || c_gamma >= 1)
            fail("MalformedRational", "c_gamma must lie in [0, 1)");
    }
};

/// Truncated expansion of a slope along the model curve in powers of beta,
/// descending from at most 1. `exact` marks a terminating expansion.
struct LaurentSlope {
    Side side;
    Rational c_gamma;
    std::vector<LaurentTerm> terms;
    bool exact;
};

/// Sign and leading term of an asymptotic slope difference. `order` is the
/// power of |beta| carrying the first nonvanishing term and `leading` its
/// coefficient toward the chosen infinity, so sign(leading) = sign.
struct AsymOrdering {
    Ordering sign;
    long order;
    Rational leading;
    bool infinite_slopes = false; // decided by an identically-infinite side
};

LaurentSlope lambda_series(const ChernCharacter& v, const CurveClass& g,
                           const StabilityParam& s, int depth);

/// Tilt slopes of rank-0 characters differ by a constant along any curve.
AsymOrdering asym_compare_nu(const ChernCharacter& v, const ChernCharacter& u,
                             const CurveClass& g);

AsymOrdering asym_compare_lambda(const ChernCharacter& v, const ChernCharacter& u,
                                 const CurveClass& g, const StabilityParam& s);

enum class GsMode { AgainstSub, AgainstQuotient };

/// Reduced-Hilbert-polynomial comparison at large argument; Greater is the
/// stable direction in both modes.
Ordering gs_compare(const ChernCharacter& e, const ChernCharacter& other, int k, GsMode mode);

struct Verdict {
    enum class Kind { Stable, Semistable, Destabilized, Rejected };
    Kind kind;
    std::optional<ChernCharacter> by;
    std::string reason;
};

std::string to_string(Verdict::Kind k);

/// Stability of a rank-0 character at beta -> -infinity relative to a set of
/// subobject candidates; strict demands strict slope inequalities.
Verdict classify_left(const ChernCharacter& v, const StabilityParam& s,
                      const std::vector<ChernCharacter>& candidates, bool strict,
                      const Rational& c_gamma = Rational(0));

/// Stability at beta -> +infinity. Candidates are quotient-side characters
/// (duals of subobjects of the dual); the verdict is computed through the
/// dual route and revalidated by direct right-side comparisons.
Verdict classify_right(const ChernCharacter& v, const StabilityParam& s,
                       const std::vector<ChernCharacter>& candidates, bool strict,
                       const Rational& c_gamma = Rational(0));

/// Limit of nu/(-beta) (left) or nu/beta (right) along the model curve,
/// reported in the conventional three-case normal form: (1 - c_gamma) /
/// (c_gamma - 1) when ch0 != 0, +-1 when ch0 = 0 != ch1, +infinity otherwise.
/// The reported rank-nonzero value is twice the raw series rate; the raw
/// rate is returned alongside.
struct NuLimit {
    ExtendedRational value;
    std::optional<Rational> series_rate; // the raw order-1 coefficient
};

NuLimit limit_table_nu(const ChernCharacter& v, const CurveClass& g);

} // namespace p3stab

#endif
