#ifndef P3STAB_FIGURE_HPP
#define P3STAB_FIGURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "p3stab/wall.hpp"

namespace p3stab {

struct SamplePoint {
    std::string curve_id;
    Rational beta;
    bool a_exact;            // a rational (surd sections are decimal-only)
    Rational a;              // exact a when a_exact
    std::string alpha;       // sqrt(a), 12 significant digits
};

struct CurveRequest {
    enum class Kind { Theta, LLine, Gamma, TiltWall, BridgelandWall };

    std::string id;
    Kind kind;
    ChernCharacter w;                 // the curve's character (or wall partner)
    std::optional<ChernCharacter> v;  // walls need the second character
    std::optional<Rational> s;

    PlanePoly poly() const;
};

struct FigureSpec {
    enum class Format { Csv, Svg };

    std::vector<CurveRequest> curves;
    Rational beta_min, beta_max;
    int samples = 2;
    std::optional<Rational> alpha_max; // vertical extent for vertical curves
    Format format = Format::Csv;
};

/// Sample the zero locus at n evenly spaced beta values; positive-a branches
/// only. Vertical loci (polynomials free of a) are sampled along alpha.
std::vector<SamplePoint> sample_curve(const PlanePoly& poly, const std::string& id,
                                      const Rational& beta_min, const Rational& beta_max,
                                      int n, const Rational& alpha_max);

/// CSV with header curve_id,beta,alpha; 12 significant digits; rows sorted
/// by (curve_id, beta, alpha). Byte-stable for identical input.
std::string emit_csv(const FigureSpec& spec);

/// Minimal standalone SVG: an axis box and one path per curve.
std::string emit_svg(const FigureSpec& spec);

std::string emit_figure(const FigureSpec& spec);

} // namespace p3stab

#endif
