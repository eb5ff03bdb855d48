#include "p3stab/poly.hpp"

#include <algorithm>
#include <map>

namespace p3stab {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return p.empty(); }

const Rational& poly_lead(const Poly& p) { return p.back(); }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly poly_shift(const Poly& a, int k) {
    if (a.empty()) return {};
    Poly r(a.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

Rational poly_eval(const Poly& a, const Rational& x) {
    Rational acc(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<LaurentTerm> laurent_at_infinity(const Poly& num, const Poly& den,
                                             int max_terms, bool* exact) {
    if (poly_is_zero(den)) fail("IdenticallyInfinite", "division by the zero polynomial");
    std::vector<LaurentTerm> out;
    if (exact) *exact = true;
    if (poly_is_zero(num)) return out;

    // Sparse remainder keyed by descending power; powers may go negative.
    std::map<long, Rational, std::greater<>> rem;
    for (size_t i = 0; i < num.size(); ++i)
        if (num[i] != 0) rem[static_cast<long>(i)] = num[i];

    const long dd = poly_degree(den);
    while (!rem.empty() && static_cast<int>(out.size()) < max_terms) {
        auto [p, c] = *rem.begin();
        LaurentTerm t{p - dd, c / poly_lead(den)};
        out.push_back(t);
        for (size_t j = 0; j < den.size(); ++j) {
            if (den[j] == 0) continue;
            long k = t.power + static_cast<long>(j);
            auto it = rem.find(k);
            Rational v = (it == rem.end() ? Rational(0) : it->second) - t.coeff * den[j];
            if (v == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[k] = v;
            }
        }
    }
    if (exact) *exact = rem.empty();
    return out;
}

void PlanePoly::normalize() {
    for (auto& p : by_a) poly_trim(p);
    while (!by_a.empty() && by_a.back().empty()) by_a.pop_back();
}

bool PlanePoly::is_zero() const {
    for (const auto& p : by_a)
        if (!poly_is_zero(p)) return false;
    return true;
}

int PlanePoly::degree_in_a() const {
    for (int j = static_cast<int>(by_a.size()) - 1; j >= 0; --j)
        if (!poly_is_zero(by_a[static_cast<size_t>(j)])) return j;
    return -1;
}

PlanePoly plane_add(const PlanePoly& p, const PlanePoly& q) {
    PlanePoly r;
    r.by_a.resize(std::max(p.by_a.size(), q.by_a.size()));
    for (size_t j = 0; j < r.by_a.size(); ++j) {
        Poly a = j < p.by_a.size() ? p.by_a[j] : Poly{};
        Poly b = j < q.by_a.size() ? q.by_a[j] : Poly{};
        r.by_a[j] = poly_add(a, b);
    }
    r.normalize();
    return r;
}

PlanePoly plane_scale(const PlanePoly& p, const Rational& c) {
    PlanePoly r = p;
    for (auto& q : r.by_a) q = poly_scale(q, c);
    r.normalize();
    return r;
}

Rational plane_eval(const PlanePoly& p, const Rational& beta, const Rational& a) {
    Rational acc(0), apow(1);
    for (const auto& q : p.by_a) {
        acc += poly_eval(q, beta) * apow;
        apow *= a;
    }
    return acc;
}

Rational plane_eval_abs(const PlanePoly& p, const Rational& beta, const Rational& a) {
    Rational acc(0), apow(1);
    for (const auto& q : p.by_a) {
        Rational bpow(1);
        for (const auto& c : q) {
            acc += rat_abs(c * bpow * apow);
            bpow *= beta;
        }
        apow *= a;
    }
    return acc;
}

Poly plane_section_in_a(const PlanePoly& p, const Rational& beta) {
    Poly r;
    r.reserve(p.by_a.size());
    for (const auto& q : p.by_a) r.push_back(poly_eval(q, beta));
    poly_trim(r);
    return r;
}

Poly plane_restrict_parabola(const PlanePoly& p, const Rational& c) {
    Poly acc;
    Rational cpow(1);
    for (size_t j = 0; j < p.by_a.size(); ++j) {
        acc = poly_add(acc, poly_shift(poly_scale(p.by_a[j], cpow), 2 * static_cast<int>(j)));
        cpow *= c;
    }
    return acc;
}

int quadroot_sign(const QuadRoot& r) {
    if (r.exact) return sign(r.value);
    // value + pm*sqrt(radicand), radicand > 0
    if (r.pm > 0) {
        if (r.value >= 0) return 1;
        return r.radicand > r.value * r.value ? 1 : (r.radicand == r.value * r.value ? 0 : -1);
    }
    if (r.value <= 0) return -1;
    return r.value * r.value > r.radicand ? 1 : (r.value * r.value == r.radicand ? 0 : -1);
}

namespace {

// sign of c + k*sqrt(x) with x >= 0
int sign_lin_sqrt(const Rational& c, const Rational& k, const Rational& x) {
    if (k == 0 || x == 0) return sign(c);
    if (k > 0) {
        if (c >= 0) return 1;
        Rational d = k * k * x - c * c;
        return sign(d);
    }
    if (c <= 0) return -1;
    Rational d = c * c - k * k * x;
    return sign(d);
}

// sign of c + p*sqrt(x) + q*sqrt(y) with p,q in {-1,0,1}, x,y >= 0
int sign_two_sqrt(const Rational& c, int p, const Rational& x, int q, const Rational& y) {
    if (p == 0 || x == 0) return sign_lin_sqrt(c, Rational(q), y);
    if (q == 0 || y == 0) return sign_lin_sqrt(c, Rational(p), x);
    // Compare T := c + p*sqrt(x) against U := -q*sqrt(y).
    int st = sign_lin_sqrt(c, Rational(p), x);
    int su = -q;
    if (st != su) return st > su ? 1 : -1;
    if (st == 0) return 0;
    // Same nonzero sign: sign(T - U) = sign(T^2 - U^2) * sign(T).
    // T^2 - U^2 = (c^2 + x - y) + 2cp*sqrt(x)
    int s2 = sign_lin_sqrt(c * c + x - y, 2 * c * Rational(p), x);
    return s2 * st;
}

} // namespace

bool quadroot_less(const QuadRoot& a, const QuadRoot& b) {
    int pa = a.exact ? 0 : a.pm;
    int pb = b.exact ? 0 : b.pm;
    return sign_two_sqrt(a.value - b.value, pa, a.radicand, -pb, b.radicand) < 0;
}

Rational quadroot_approx(const QuadRoot& r, int digits) {
    if (r.exact) return r.value;
    Rational s = approx_sqrt_rational(r.radicand, digits);
    return r.pm > 0 ? Rational(r.value + s) : Rational(r.value - s);
}

std::vector<QuadRoot> quadratic_roots(const Poly& p) {
    if (poly_is_zero(p))
        fail("IdenticallyZero", "every value solves the zero polynomial");
    int d = poly_degree(p);
    if (d == 0) return {};
    if (d == 1) {
        QuadRoot r{true, -p[0] / p[1], Rational(0), 0};
        return {r};
    }
    if (d != 2) fail("IdenticallyZero", "root isolation only supports degree <= 2");
    Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (disc < 0) return {};
    Rational base = -p[1] / (2 * p[2]);
    if (disc == 0) return {QuadRoot{true, base, Rational(0), 0}};
    Rational rad = disc / (4 * p[2] * p[2]);
    Rational sq;
    std::vector<QuadRoot> out;
    if (rational_sqrt(rad, &sq)) {
        out.push_back({true, base - sq, Rational(0), 0});
        out.push_back({true, base + sq, Rational(0), 0});
    } else {
        out.push_back({false, base, rad, -1});
        out.push_back({false, base, rad, +1});
    }
    return out;
}

} // namespace p3stab
