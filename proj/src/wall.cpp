#include "p3stab/wall.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace p3stab {

PlanePoly TiltWallGeometry::poly() const {
    PlanePoly p;
    p.by_a = {Poly{z, y, x}, Poly{x}};
    p.normalize();
    return p;
}

TiltWallGeometry tilt_wall(const ChernCharacter& v, const ChernCharacter& w) {
    if (v.is_zero() || w.is_zero()) fail("ZeroCharacter", "wall for the zero character");
    const Rational &R = w[0], &C = w[1], &D = w[2];
    const Rational &r = v[0], &c = v[1], &d = v[2];

    TiltWallGeometry g;
    g.x = R * c - C * r;
    g.y = 2 * (D * r - R * d);
    g.z = 2 * (C * d - D * c);

    if (g.x != 0) {
        Rational disc = g.y * g.y - 4 * g.x * g.z;
        if (disc > 0) {
            g.kind = TiltWallGeometry::Kind::Semicircle;
            g.center = -g.y / (2 * g.x);
            g.radius2 = disc / (4 * g.x * g.x);
        } else {
            g.kind = TiltWallGeometry::Kind::Empty;
        }
    } else if (g.y != 0) {
        g.kind = TiltWallGeometry::Kind::VerticalRay;
        g.ray_beta = -g.z / g.y;
    } else {
        g.kind = TiltWallGeometry::Kind::Degenerate;
    }
    return g;
}

namespace {

// -Re Z^tilt = ch2^beta - (a/2) ch0
Rational neg_re_z_tilt(const ChernCharacter& w, const HalfPlanePoint& p) {
    QVec t = twist(w.vec(), p.beta);
    return t[2] - p.a * w[0] / 2;
}

} // namespace

HalfPlanePoint wall_apex(const TiltWallGeometry& g, const ChernCharacter& w) {
    if (g.kind != TiltWallGeometry::Kind::Semicircle)
        fail("NotASemicircle", "only semicircular walls have an apex");
    HalfPlanePoint apex(g.center, g.radius2);
    if (neg_re_z_tilt(w, apex) != 0)
        throw std::logic_error("wall apex is off the Theta-curve: geometry/character mismatch");
    return apex;
}

CurveDescriptor distinguished_curve(CurveKind kind, const ChernCharacter& w,
                                    std::optional<StabilityParam> s) {
    if (w.is_zero()) fail("ZeroCharacter", "curve for the zero character");
    CurveDescriptor out;
    out.kind = kind;
    switch (kind) {
    case CurveKind::LLine:
        if (w[0] == 0) fail("RankZeroLine", "the vertical line needs ch0 != 0");
        out.poly.by_a = {Poly{w[1], -w[0]}};
        break;
    case CurveKind::ThetaCurve:
        // ch2^beta - (a/2) ch0
        out.poly.by_a = {Poly{w[2], -w[1], w[0] / 2}, Poly{-w[0] / 2}};
        break;
    case CurveKind::GammaCurve: {
        if (!s) fail("MissingS", "the Gamma-curve needs the stability parameter s");
        // -ch3^beta + (s + 1/6) a ch1^beta
        Rational sigma = s->value + Rational(1, 6);
        out.poly.by_a = {Poly{-w[3], w[2], -w[1] / 2, w[0] / 6},
                         poly_scale(Poly{w[1], -w[0]}, sigma)};
        break;
    }
    }
    out.poly.normalize();
    return out;
}

PlanePoly QuarticWall::poly() const {
    PlanePoly p;
    p.by_a = {Poly{C0, C1, C2, C3, C4}, Poly{B0, B1, B2}, Poly{A}};
    p.normalize();
    return p;
}

bool QuarticWall::identically_zero() const {
    return A == 0 && B2 == 0 && B1 == 0 && B0 == 0 && C4 == 0 && C3 == 0 && C2 == 0 &&
           C1 == 0 && C0 == 0;
}

QuarticWall bridgeland_wall(const ChernCharacter& v, const ChernCharacter& w,
                            const StabilityParam& s) {
    if (v.is_zero() || w.is_zero()) fail("ZeroCharacter", "wall for the zero character");
    Rational d10 = delta(1, 0, v, w), d20 = delta(2, 0, v, w), d21 = delta(2, 1, v, w);
    Rational d30 = delta(3, 0, v, w), d31 = delta(3, 1, v, w), d32 = delta(3, 2, v, w);
    const Rational& sv = s.value;

    QuarticWall f;
    f.A = (6 * sv + 1) / 12 * d10;
    f.B2 = (3 * sv - 1) / 6 * d10;
    f.B1 = (1 - 3 * sv) / 3 * d20;
    f.B0 = (6 * sv + 1) / 6 * d21 - d30 / 2;
    f.C4 = d10 / 12;
    f.C3 = -d20 / 3;
    f.C2 = (d30 + d21) / 2;
    f.C1 = -d31;
    f.C0 = d32;
    return f;
}

std::vector<QuadRoot> wall_section(const QuarticWall& wall, const Rational& beta) {
    if (wall.identically_zero())
        fail("IdenticallyZero", "the two characters are proportional: the wall is everything");
    Poly section = plane_section_in_a(wall.poly(), beta);
    if (poly_is_zero(section))
        fail("IdenticallyZero",
             "the section at beta = " + to_string(beta) + " is the whole vertical line");
    std::vector<QuadRoot> roots = quadratic_roots(section);
    std::vector<QuadRoot> positive;
    for (const auto& r : roots)
        if (quadroot_sign(r) > 0) positive.push_back(r);
    return positive;
}

WallWindow::WallWindow(Rational bmin, Rational bmax, Rational max_im, Rational max_q)
    : beta_min(std::move(bmin)), beta_max(std::move(bmax)), max_imaginary(std::move(max_im)),
      max_qtilt(std::move(max_q)) {
    if (beta_min >= beta_max) fail("WindowEmpty", "beta_min must be below beta_max");
    if (max_imaginary <= 0 || max_qtilt <= 0)
        fail("WindowEmpty", "window bounds must be positive");
}

namespace {

// sign of c + k*sqrt(x), x >= 0
int lin_sqrt_sign(const Rational& c, const Rational& k, const Rational& x) {
    if (k == 0 || x == 0) return sign(c);
    if (k > 0) {
        if (c >= 0) return 1;
        return sign(Rational(k * k * x - c * c));
    }
    if (c <= 0) return -1;
    return sign(Rational(c * c - k * k * x));
}

struct OpenInterval {
    bool empty = false;
    std::optional<Rational> lo, hi; // open endpoints

    // add constraint alpha - gamma*beta > 0
    void constrain(const Rational& alpha, const Rational& gamma) {
        if (empty) return;
        if (gamma == 0) {
            if (alpha <= 0) empty = true;
            return;
        }
        Rational bound = alpha / gamma;
        if (gamma > 0) {
            if (!hi || bound < *hi) hi = bound;
        } else {
            if (!lo || bound > *lo) lo = bound;
        }
        if (lo && hi && *lo >= *hi) empty = true;
    }

    bool contains(const Rational& b) const {
        if (empty) return false;
        if (lo && b <= *lo) return false;
        if (hi && b >= *hi) return false;
        return true;
    }
};

// beta-interval where 0 < ch1^beta(u) < ch1^beta(v)
OpenInterval betweenness_interval(const ChernCharacter& u, const ChernCharacter& v) {
    OpenInterval iv;
    iv.constrain(u[1], u[0]);
    iv.constrain(v[1] - u[1], v[0] - u[0]);
    return iv;
}

// Does the wall carry a point with beta in the window where the betweenness
// condition holds? Exact; semicircle feet are surds, compared by squaring.
bool wall_admissible(const TiltWallGeometry& g, const ChernCharacter& u,
                     const ChernCharacter& v, const WallWindow& win) {
    OpenInterval iv = betweenness_interval(u, v);
    if (iv.empty) return false;

    if (g.kind == TiltWallGeometry::Kind::VerticalRay)
        return g.ray_beta >= win.beta_min && g.ray_beta <= win.beta_max &&
               iv.contains(g.ray_beta);
    if (g.kind != TiltWallGeometry::Kind::Semicircle) return false;

    Rational lr = win.beta_min, ur = win.beta_max;
    if (iv.lo && *iv.lo > lr) lr = *iv.lo;
    if (iv.hi && *iv.hi < ur) ur = *iv.hi;
    if (lr >= ur) return false;

    // overlap of (lr, ur) with the open wall domain (center - rho, center + rho)
    if (lin_sqrt_sign(lr - g.center, -1, g.radius2) >= 0) return false; // lr >= center + rho
    if (lin_sqrt_sign(ur - g.center, 1, g.radius2) <= 0) return false;  // ur <= center - rho
    return true;
}

std::string wall_key(const TiltWallGeometry& g) {
    // primitive integer (x : y : z), first nonzero positive
    Integer l = den(g.x) * den(g.y) * den(g.z);
    Integer xs[3] = {num(g.x) * (l / den(g.x)), num(g.y) * (l / den(g.y)),
                     num(g.z) * (l / den(g.z))};
    Integer d(0);
    for (const auto& t : xs) d = boost::multiprecision::gcd(d, t);
    if (d == 0) d = 1;
    int flip = 1;
    for (const auto& t : xs)
        if (t != 0) {
            flip = t < 0 ? -1 : 1;
            break;
        }
    std::string key;
    for (auto& t : xs) key += Integer(t / d * flip).str() + ":";
    return key;
}

struct Found {
    ChernCharacter u;
    TiltWallGeometry g;
    std::string key;
};

bool rep_less(const ChernCharacter& a, const ChernCharacter& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::vector<Found> scan_rank(const Integer& u0i, const ChernCharacter& v,
                             const WallWindow& win) {
    std::vector<Found> out;
    Rational u0(u0i);
    Rational lo1 = std::max(Rational(win.beta_min * u0), Rational(win.beta_max * u0)) -
                   win.max_imaginary;
    Rational hi1 = std::min(Rational(win.beta_min * u0), Rational(win.beta_max * u0)) +
                   win.max_imaginary;
    for (Integer u1i = ceil_int(lo1); u1i <= floor_int(hi1); ++u1i) {
        Rational u1(u1i);
        Rational d_lo, d_hi;
        if (u0 != 0) {
            // 0 <= u1^2 - 2 u0 u2 <= max_qtilt
            Rational b1 = u1 * u1 / (2 * u0), b2 = (u1 * u1 - win.max_qtilt) / (2 * u0);
            d_lo = std::min(b1, b2);
            d_hi = std::max(b1, b2);
        } else {
            if (u1 <= 0 || u1 * u1 > win.max_qtilt) continue;
            if (v[0] == 0) continue; // rank-0 against rank-0 walls are degenerate
            Rational beta_star = (v[1] - u1) / v[0];
            if (v[0] > 0) {
                Rational bstar = std::min(win.beta_max, beta_star);
                if (win.beta_min >= bstar) continue;
                d_lo = v[2] - (v[1] - u1) * (v[1] - u1) / (2 * v[0]);
                Rational c1 = 2 * (bstar * v[0] - v[1]); // negative
                d_hi = std::max(Rational(bstar * u1),
                                Rational(u1 * (bstar * bstar * v[0] - 2 * v[2]) / c1));
            } else {
                Rational btil = std::max(win.beta_min, beta_star);
                if (btil >= win.beta_max) continue;
                d_hi = v[2] - (v[1] - u1) * (v[1] - u1) / (2 * v[0]);
                Rational c1 = 2 * (btil * v[0] - v[1]); // negative
                d_lo = std::min(Rational(btil * u1),
                                Rational(u1 * (btil * btil * v[0] - 2 * v[2]) / c1));
            }
        }
        for (Integer h = ceil_int(Rational(2 * d_lo)); h <= floor_int(Rational(2 * d_hi)); ++h) {
            ChernCharacter u(u0, u1, make_rational(h, 2), Rational(0));
            if (u.is_zero()) continue;
            Rational qu = q_tilt(u);
            if (qu < 0 || qu > win.max_qtilt) continue;
            if (q_tilt(v - u) < 0) continue;
            TiltWallGeometry g = tilt_wall(u, v);
            if (g.kind != TiltWallGeometry::Kind::Semicircle &&
                g.kind != TiltWallGeometry::Kind::VerticalRay)
                continue;
            if (!wall_admissible(g, u, v, win)) continue;
            out.push_back({u, g, wall_key(g)});
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<ChernCharacter, TiltWallGeometry>>
enumerate_tilt_walls(const ChernCharacter& v, const WallWindow& win) {
    if (v.is_zero()) fail("ZeroCharacter", "cannot enumerate walls for the zero character");

    Integer rank_cap = floor_int(Rational(2 * win.max_imaginary / (win.beta_max - win.beta_min)));
    std::vector<Integer> ranks;
    for (Integer r = -rank_cap; r <= rank_cap; ++r) ranks.push_back(r);

    std::vector<std::vector<Found>> slices(ranks.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (ranks.size() >= 4 && workers > 1) {
        std::vector<std::future<std::vector<Found>>> futs;
        futs.reserve(ranks.size());
        for (const auto& r : ranks)
            futs.push_back(std::async(std::launch::async, scan_rank, r, v, win));
        for (size_t i = 0; i < futs.size(); ++i) slices[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < ranks.size(); ++i) slices[i] = scan_rank(ranks[i], v, win);
    }

    // one wall per projective (x:y:z) class, smallest representative kept
    std::map<std::string, Found> walls;
    for (const auto& slice : slices)
        for (const auto& f : slice) {
            auto it = walls.find(f.key);
            if (it == walls.end() || rep_less(f.u, it->second.u)) walls[f.key] = f;
        }

    std::vector<Found> flat;
    flat.reserve(walls.size());
    for (auto& [key, f] : walls) flat.push_back(std::move(f));
    std::sort(flat.begin(), flat.end(), [](const Found& a, const Found& b) {
        bool acirc = a.g.kind == TiltWallGeometry::Kind::Semicircle;
        bool bcirc = b.g.kind == TiltWallGeometry::Kind::Semicircle;
        if (acirc != bcirc) return acirc; // rays last
        if (acirc) {
            if (a.g.center != b.g.center) return a.g.center < b.g.center;
            if (a.g.radius2 != b.g.radius2) return a.g.radius2 < b.g.radius2;
        } else if (a.g.ray_beta != b.g.ray_beta) {
            return a.g.ray_beta < b.g.ray_beta;
        }
        return rep_less(a.u, b.u);
    });

    std::vector<std::pair<ChernCharacter, TiltWallGeometry>> out;
    out.reserve(flat.size());
    for (auto& f : flat) out.emplace_back(f.u, f.g);
    return out;
}

} // namespace p3stab
