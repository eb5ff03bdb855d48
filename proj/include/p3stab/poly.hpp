#ifndef P3STAB_POLY_HPP
#define P3STAB_POLY_HPP

#include <utility>
#include <vector>

#include "p3stab/rational.hpp"

namespace p3stab {

/// Dense univariate polynomial over Q, coefficient of x^i at index i.
/// Normalized: no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p); // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Poly poly_shift(const Poly& a, int k); // multiply by x^k, k >= 0
Rational poly_eval(const Poly& a, const Rational& x);
bool poly_is_zero(const Poly& a);
const Rational& poly_lead(const Poly& a);

struct LaurentTerm {
    long power;
    Rational coeff;
};

/// Expansion of num/den in descending powers of x at x -> infinity.
/// Emits up to max_terms nonzero terms; *exact is set when the remainder
/// vanished (the expansion terminates).
std::vector<LaurentTerm> laurent_at_infinity(const Poly& num, const Poly& den,
                                             int max_terms, bool* exact = nullptr);

/// Polynomial in (beta, a): by_a[j] is the beta-polynomial multiplying a^j.
struct PlanePoly {
    std::vector<Poly> by_a;

    void normalize();
    bool is_zero() const;
    int degree_in_a() const;
};

PlanePoly plane_add(const PlanePoly& p, const PlanePoly& q);
PlanePoly plane_scale(const PlanePoly& p, const Rational& c);
Rational plane_eval(const PlanePoly& p, const Rational& beta, const Rational& a);
/// Sum of |coeff * beta^i * a^j| over all terms; scale reference for residuals.
Rational plane_eval_abs(const PlanePoly& p, const Rational& beta, const Rational& a);
Poly plane_section_in_a(const PlanePoly& p, const Rational& beta);
/// Substitute a = c * beta^2.
Poly plane_restrict_parabola(const PlanePoly& p, const Rational& c);

/// One real root of a polynomial of degree <= 2: either an exact rational or
/// the quadratic surd base + pm*sqrt(radicand) with radicand > 0 irrational.
struct QuadRoot {
    bool exact;
    Rational value;    // the root when exact, otherwise the surd base
    Rational radicand; // 0 when exact
    int pm;            // +1 / -1 for surds, 0 when exact
};

int quadroot_sign(const QuadRoot& r);
bool quadroot_less(const QuadRoot& a, const QuadRoot& b);
Rational quadroot_approx(const QuadRoot& r, int digits);

/// All real roots of a degree <= 2 polynomial, ascending.
/// The zero polynomial is rejected (code IdenticallyZero).
std::vector<QuadRoot> quadratic_roots(const Poly& p);

} // namespace p3stab

#endif
