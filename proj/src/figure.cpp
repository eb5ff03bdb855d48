#include "p3stab/figure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace p3stab {

PlanePoly CurveRequest::poly() const {
    switch (kind) {
    case Kind::Theta:
        return distinguished_curve(CurveKind::ThetaCurve, w).poly;
    case Kind::LLine:
        return distinguished_curve(CurveKind::LLine, w).poly;
    case Kind::Gamma:
        if (!s) fail("MissingS", "the Gamma-curve needs s");
        return distinguished_curve(CurveKind::GammaCurve, w, StabilityParam(*s)).poly;
    case Kind::TiltWall:
        if (!v) fail("ZeroCharacter", "a tilt wall needs both characters");
        return tilt_wall(*v, w).poly();
    case Kind::BridgelandWall:
        if (!v) fail("ZeroCharacter", "a lambda-wall needs both characters");
        if (!s) fail("MissingS", "a lambda-wall needs s");
        return bridgeland_wall(*v, w, StabilityParam(*s)).poly();
    }
    fail("UsageError", "unknown curve kind");
}

namespace {

void validate_id(const std::string& id) {
    if (id.empty()) fail("BadCurveId", "empty curve id");
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-' || c == '.';
        if (!ok) fail("BadCurveId", "curve ids are [A-Za-z0-9_.-], got '" + id + "'");
    }
}

std::string alpha_digits(const QuadRoot& root) {
    if (root.exact) return sqrt_decimal_sig(root.value, 12);
    return sqrt_decimal_sig(quadroot_approx(root, 24), 12);
}

} // namespace

std::vector<SamplePoint> sample_curve(const PlanePoly& poly, const std::string& id,
                                      const Rational& beta_min, const Rational& beta_max,
                                      int n, const Rational& alpha_max) {
    validate_id(id);
    if (n < 2) fail("KOutOfRange", "need at least 2 samples");
    if (beta_min >= beta_max) fail("EmptyRange", "empty beta range");
    if (alpha_max <= 0) fail("EmptyRange", "vertical extent must be positive");
    if (poly.is_zero()) fail("IdenticallyZero", "cannot sample the zero polynomial");

    std::vector<SamplePoint> out;
    if (poly.degree_in_a() <= 0) {
        // vertical locus: p(beta) = 0, sampled along alpha
        Poly p = poly.by_a.empty() ? Poly{} : poly.by_a[0];
        for (const auto& root : quadratic_roots(p)) {
            if (!root.exact) continue; // irrational vertical lines are off-lattice
            if (root.value < beta_min || root.value > beta_max) continue;
            for (int j = 1; j <= n; ++j) {
                Rational a = alpha_max * alpha_max *
                             make_rational(Integer(j) * j, Integer(n) * n);
                out.push_back({id, root.value, true, a, sqrt_decimal_sig(a, 12)});
            }
        }
        return out;
    }

    Rational step = (beta_max - beta_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        Rational beta = beta_min + step * i;
        Poly section = plane_section_in_a(poly, beta);
        if (poly_is_zero(section)) continue; // whole fiber: nothing to plot
        for (const auto& root : quadratic_roots(section)) {
            if (quadroot_sign(root) <= 0) continue;
            SamplePoint pt{id, beta, root.exact, root.exact ? root.value : Rational(0),
                           alpha_digits(root)};
            out.push_back(pt);
        }
    }
    return out;
}

namespace {

struct Row {
    std::string id;
    Rational beta;
    Rational alpha; // parsed back from the 12-digit decimal, exact
    std::string beta_str, alpha_str;
};

std::vector<Row> collect_rows(const FigureSpec& spec) {
    if (spec.curves.empty()) fail("EmptyRange", "a figure needs at least one curve");
    if (spec.samples < 2) fail("EmptyRange", "a figure needs at least 2 samples");
    if (spec.beta_min >= spec.beta_max) fail("EmptyRange", "empty beta range");
    Rational alpha_max =
        spec.alpha_max ? *spec.alpha_max : Rational((spec.beta_max - spec.beta_min) / 2);

    std::vector<Row> rows;
    for (const auto& req : spec.curves) {
        auto pts = sample_curve(req.poly(), req.id, spec.beta_min, spec.beta_max, spec.samples,
                                alpha_max);
        for (const auto& p : pts) {
            Row r;
            r.id = p.curve_id;
            r.beta = p.beta;
            r.beta_str = decimal_sig(p.beta, 12);
            r.alpha_str = p.alpha;
            r.alpha = parse_decimal(p.alpha);
            rows.push_back(std::move(r));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.id != b.id) return a.id < b.id;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.alpha < b.alpha;
    });
    return rows;
}

} // namespace

std::string emit_csv(const FigureSpec& spec) {
    std::ostringstream os;
    os << "curve_id,beta,alpha\n";
    for (const auto& r : collect_rows(spec))
        os << r.id << "," << r.beta_str << "," << r.alpha_str << "\n";
    return os.str();
}

std::string emit_svg(const FigureSpec& spec) {
    std::vector<Row> rows = collect_rows(spec);

    // data bounds; y is flipped into SVG coordinates
    Rational xmin = spec.beta_min, xmax = spec.beta_max;
    Rational ymax(1);
    for (const auto& r : rows) ymax = std::max(ymax, r.alpha);
    Rational pad = (xmax - xmin) / 20;
    Rational width = xmax - xmin + 2 * pad, height = ymax + 2 * pad;
    auto sx = [&](const Rational& x) { return decimal_sig(x - xmin + pad, 12); };
    auto sy = [&](const Rational& y) { return decimal_sig(ymax - y + pad, 12); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << decimal_sig(width, 12)
       << " " << decimal_sig(height, 12) << "\">\n";
    os << "<rect x=\"" << decimal_sig(pad, 12) << "\" y=\"" << decimal_sig(pad, 12)
       << "\" width=\"" << decimal_sig(xmax - xmin, 12) << "\" height=\""
       << decimal_sig(ymax, 12) << "\" fill=\"none\" stroke=\"black\"/>\n";

    // group rows per curve, branch = index among the alphas sharing one beta
    std::map<std::string, std::map<Rational, std::vector<Rational>>> curves;
    for (const auto& r : rows) curves[r.id][r.beta].push_back(r.alpha);

    for (const auto& [id, fibers] : curves) {
        size_t max_branch = 0;
        for (const auto& [beta, alphas] : fibers) max_branch = std::max(max_branch, alphas.size());
        std::string d;
        for (size_t branch = 0; branch < max_branch; ++branch) {
            bool in_path = false;
            for (const auto& [beta, alphas] : fibers) {
                if (branch >= alphas.size()) {
                    in_path = false;
                    continue;
                }
                d += in_path ? " L " : " M ";
                d += sx(beta) + " " + sy(alphas[branch]);
                in_path = true;
            }
        }
        if (d.empty()) continue;
        os << "<path fill=\"none\" stroke=\"black\" stroke-width=\""
           << decimal_sig(height / 200, 12) << "\" d=\"" << d.substr(1) << "\"/>\n";
        const auto& [beta0, alphas0] = *fibers.begin();
        os << "<text x=\"" << sx(beta0) << "\" y=\"" << sy(alphas0.front()) << "\" font-size=\""
           << decimal_sig(height / 25, 12) << "\">" << id << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string emit_figure(const FigureSpec& spec) {
    return spec.format == FigureSpec::Format::Csv ? emit_csv(spec) : emit_svg(spec);
}

} // namespace p3stab
