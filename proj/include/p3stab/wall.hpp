#ifndef P3STAB_WALL_HPP
#define P3STAB_WALL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "p3stab/slope.hpp"

namespace p3stab {

/// A numerical tilt wall x(a + beta^2) + y beta + z = 0: a semicircle
/// centered on the beta-axis, a vertical ray, or nothing.
struct TiltWallGeometry {
    enum class Kind { Semicircle, VerticalRay, Empty, Degenerate };

    Rational x, y, z;
    Kind kind = Kind::Degenerate;
    Rational center, radius2; // Semicircle
    Rational ray_beta;        // VerticalRay

    PlanePoly poly() const;
};

/// Wall where nu(v) = nu(w). Coefficients use w = (R,C,D):
/// x = R c - C r, y = 2(D r - R d), z = 2(C d - D c).
TiltWallGeometry tilt_wall(const ChernCharacter& v, const ChernCharacter& w);

/// Top point (center, radius^2) of a semicircular wall; it lies on the
/// Theta-curve of w (checked exactly).
HalfPlanePoint wall_apex(const TiltWallGeometry& g, const ChernCharacter& w);

enum class CurveKind { LLine, ThetaCurve, GammaCurve };

struct CurveDescriptor {
    CurveKind kind;
    PlanePoly poly;
};

/// L: ch1^beta(w) = 0 (needs rank), Theta: Re Z^tilt(w) = 0,
/// Gamma: Re Z_{beta,alpha,s}(w) = 0 (needs s).
CurveDescriptor distinguished_curve(CurveKind kind, const ChernCharacter& w,
                                    std::optional<StabilityParam> s = std::nullopt);

/// lambda-wall polynomial f_{v,w}: quadratic in a = alpha^2, quartic in beta.
struct QuarticWall {
    Rational A;              // a^2
    Rational B2, B1, B0;     // a * (B2 b^2 + B1 b + B0)
    Rational C4, C3, C2, C1, C0;

    PlanePoly poly() const;
    bool identically_zero() const;
};

QuarticWall bridgeland_wall(const ChernCharacter& v, const ChernCharacter& w,
                            const StabilityParam& s);

/// Exact positive roots in a of the wall's section at fixed beta, ascending.
std::vector<QuadRoot> wall_section(const QuarticWall& wall, const Rational& beta);

struct WallWindow {
    Rational beta_min, beta_max;
    Rational max_imaginary; // cap on |ch1^beta| of candidates across the window
    Rational max_qtilt;

    WallWindow(Rational bmin, Rational bmax, Rational max_im, Rational max_q);
};

/// All tilt walls for v meeting the window, as (partner, geometry) pairs.
/// Partners are searched up to w ~ w + c*v and overall scaling, with ch3
/// normalized to zero (the wall does not depend on it); requires
/// q_tilt >= 0 on both the partner and its complement, q_tilt <= max_qtilt
/// on the partner, and 0 < ch1^beta(w) < ch1^beta(v) somewhere on the wall
/// inside the window. Sorted by (center, radius2), rays last.
std::vector<std::pair<ChernCharacter, TiltWallGeometry>>
enumerate_tilt_walls(const ChernCharacter& v, const WallWindow& win);

} // namespace p3stab

#endif
