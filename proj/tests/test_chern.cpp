#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace p3stab;
using testutil::thrown_code;

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational(" 1/6 ") == Rational(1, 6));
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(thrown_code([] { parse_rational("1/0"); }) == "MalformedRational");
    CHECK(thrown_code([] { parse_rational("1.5"); }) == "MalformedRational");
    CHECK(thrown_code([] { parse_rational(""); }) == "MalformedRational");
    CHECK(thrown_code([] { parse_rational("--2"); }) == "MalformedRational");
}

TEST_CASE("decimal rendering is exact-sourced") {
    CHECK(decimal_sig(Rational(3, 2), 12) == "1.50000000000");
    CHECK(decimal_sig(Rational(-7, 4), 12) == "-1.75000000000");
    CHECK(decimal_sig(Rational(1, 3), 12) == "0.333333333333");
    CHECK(decimal_sig(Rational(0), 12) == "0");
    CHECK(decimal_sig(Rational(999999999999995, 1000000000000000), 12) == "1.00000000000");
    CHECK(sqrt_decimal_sig(Rational(3, 4), 12) == "0.866025403784");
    CHECK(sqrt_decimal_sig(Rational(2), 12) == "1.41421356237");
    CHECK(sqrt_decimal_sig(Rational(1, 4), 12) == "0.500000000000");
    CHECK(parse_decimal("-1.75") == Rational(-7, 4));
    CHECK(parse_decimal("0.866025403784") == Rational(866025403784LL, Integer("1000000000000")));
}

TEST_CASE("character parsing and lattice denominators") {
    ChernCharacter instanton = parse_character("2,0,-2,0");
    CHECK(instanton == ChernCharacter(2, 0, -2, 0));
    ChernCharacter plane = parse_character("0,1,-1/2,1/6");
    CHECK(plane[2] == Rational(-1, 2));
    CHECK(parse_character(" 0 , 1 , -1/2 , 1/6 ") == plane);
    CHECK(thrown_code([] { parse_character("1,0,1/3,0"); }) == "DenominatorViolation");
    CHECK(thrown_code([] { parse_character("1/2,0,0,0"); }) == "DenominatorViolation");
    CHECK(thrown_code([] { parse_character("0,1/2,0,0"); }) == "DenominatorViolation");
    CHECK(thrown_code([] { parse_character("1,0,0"); }) == "MalformedRational");
    CHECK(thrown_code([] { parse_character("1,0,0,0,0"); }) == "MalformedRational");
}

TEST_CASE("twisting") {
    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    TwistedCharacter t = twist(plane, Rational(-2));
    CHECK(t.ch == QVec{Rational(0), Rational(1), Rational(3, 2), Rational(7, 6)});

    std::mt19937 rng(7201);
    for (int trial = 0; trial < 50; ++trial) {
        ChernCharacter v = testutil::random_character(rng, 5);
        CHECK(twist(v, Rational(0)).ch == v.vec());
        Rational b1 = testutil::random_rational(rng, 8, 6);
        Rational b2 = testutil::random_rational(rng, 8, 6);
        // additive group action, and twisting back is the identity
        CHECK(twist(twist(v.vec(), b1), b2) == twist(v.vec(), b1 + b2));
        CHECK(twist(twist(v.vec(), b1), -b1) == v.vec());
    }
}

TEST_CASE("tensor by line bundles") {
    CHECK(tensor_line(ChernCharacter(1, 0, 0, 0), 3) ==
          ChernCharacter(1, 3, Rational(9, 2), Rational(9, 2)));
    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    CHECK(tensor_line(plane, -1) == ChernCharacter(0, 1, Rational(-3, 2), Rational(7, 6)));
    CHECK(tensor_line(plane, 0) == plane);
    // ch(O(-1)) - ch(O(-2)) agrees with the twisted plane class
    CHECK(line_bundle(-1) - line_bundle(-2) == tensor_line(plane, -1));

    std::mt19937 rng(7202);
    for (int trial = 0; trial < 30; ++trial) {
        ChernCharacter v = testutil::random_character(rng, 5);
        long k = static_cast<long>(trial % 9) - 4;
        CHECK(tensor_line(v, k).vec() == twist(v.vec(), Rational(-k)));
        // P_{v(k)}(n) = P_v(n+k)
        HilbertPolynomial pk = hilbert_polynomial(tensor_line(v, k));
        HilbertPolynomial p = hilbert_polynomial(v);
        for (int n = -4; n <= 4; ++n)
            CHECK(pk.eval(Rational(n)) == p.eval(Rational(n + k)));
    }
}

TEST_CASE("derived dual") {
    // conic: chi(O_C(n)) = 2n+1 pins ch = (0,0,2,-3); the resolution
    // O -> O(1)+O(2) -> O(3) -> dual gives (0,0,2,3)
    ChernCharacter conic(0, 0, 2, -3);
    ChernCharacter from_resolution =
        line_bundle(3) - line_bundle(1) - line_bundle(2) + line_bundle(0);
    CHECK(from_resolution == ChernCharacter(0, 0, 2, 3));
    CHECK(dual(conic) == from_resolution);

    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    CHECK(dual(plane) == ChernCharacter(0, -1, Rational(-1, 2), Rational(-1, 6)));

    std::mt19937 rng(7203);
    for (int trial = 0; trial < 100; ++trial) {
        ChernCharacter v = testutil::random_character(rng, 6);
        CHECK(dual(dual(v)) == v);
    }
    // delta parity under dualization
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            ChernCharacter v(1, a, Rational(b, 2), Rational(a, 6));
            ChernCharacter w(0, b, Rational(a, 2), Rational(b, 6));
            if (v.is_zero() || w.is_zero()) continue;
            CHECK(delta(2, 1, dual(v), dual(w)) == -delta(2, 1, v, w));
            CHECK(delta(3, 1, dual(v), dual(w)) == delta(3, 1, v, w));
        }
}

TEST_CASE("delta pairings") {
    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    ChernCharacter shifted(0, 1, Rational(-3, 2), Rational(7, 6));
    CHECK(delta(2, 1, plane, shifted) == Rational(1));
    CHECK(delta(1, 0, ChernCharacter(1, 3, Rational(9, 2), Rational(9, 2)),
                ChernCharacter(0, 0, 2, 3)) == Rational(0));
    CHECK(thrown_code([&] { delta(1, 2, plane, shifted); }) == "IndexOutOfRange");
    CHECK(thrown_code([&] { delta(4, 0, plane, shifted); }) == "IndexOutOfRange");

    std::mt19937 rng(7204);
    for (int trial = 0; trial < 40; ++trial) {
        ChernCharacter v = testutil::random_character(rng, 4);
        ChernCharacter w = testutil::random_character(rng, 4);
        ChernCharacter w2 = testutil::random_character(rng, 4);
        for (int i = 1; i <= 3; ++i)
            for (int j = 0; j < i; ++j) {
                CHECK(delta(i, j, v, v) == Rational(0));
                CHECK(delta(i, j, v, w) == -delta(i, j, w, v));
                CHECK(delta(i, j, v, w + w2) == delta(i, j, v, w) + delta(i, j, v, w2));
            }
    }
}

TEST_CASE("Bogomolov forms") {
    CHECK(q_tilt(ChernCharacter(2, 0, -2, 0)) == Rational(8));
    CHECK(q_tilt(ChernCharacter(0, 1, Rational(-1, 2), Rational(1, 6))) == Rational(1));
    for (long k = -3; k <= 3; ++k) CHECK(q_tilt(line_bundle(k)) == Rational(0));

    // line bundles cancel exactly in the generalized form
    for (long k = -2; k <= 2; ++k)
        for (int b = -3; b <= 3; ++b)
            for (int anum = 1; anum <= 4; ++anum) {
                HalfPlanePoint p(Rational(b), Rational(anum, 2));
                CHECK(q_bmt(line_bundle(k), p) == Rational(0));
            }

    ChernCharacter instanton(2, 0, -2, 0);
    for (int anum = 1; anum <= 6; ++anum) {
        Rational a(anum, 3);
        CHECK(q_bmt(instanton, HalfPlanePoint(Rational(0), a)) == 8 * a + 16);
    }

    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    for (int b = -4; b <= 4; ++b)
        for (int anum = 1; anum <= 8; ++anum)
            CHECK(q_bmt(plane, HalfPlanePoint(Rational(b), Rational(anum, 2))) >= 0);

    // rank-0 closed form
    std::mt19937 rng(7205);
    for (int trial = 0; trial < 40; ++trial) {
        ChernCharacter v = testutil::random_rank0(rng, 5);
        Rational b = testutil::random_rational(rng, 6, 4);
        Rational a = testutil::random_rational(rng, 6, 4);
        if (a <= 0) a = 1 - a;
        HalfPlanePoint p(b, a);
        Rational direct = 4 * (v[2] - b * v[1]) * (v[2] - b * v[1]) -
                          6 * v[1] * (v[3] - b * v[2] + b * b * v[1] / 2) + v[1] * v[1] * a;
        CHECK(q_bmt(v, p) == direct);
    }
}

TEST_CASE("Hilbert polynomials against Euler-characteristic references") {
    for (long k = -5; k <= 5; ++k) {
        HilbertPolynomial p = hilbert_polynomial(line_bundle(k));
        for (int n = -10; n <= 10; ++n)
            CHECK(p.eval(Rational(n)) == testutil::binom3(Rational(n + k)));
    }
    HilbertPolynomial plane = hilbert_polynomial(ChernCharacter(0, 1, Rational(-1, 2), Rational(1, 6)));
    for (int n = -10; n <= 10; ++n) CHECK(plane.eval(Rational(n)) == testutil::binom2(Rational(n)));
    HilbertPolynomial conic = hilbert_polynomial(ChernCharacter(0, 0, 2, -3));
    for (int n = -10; n <= 10; ++n) CHECK(conic.eval(Rational(n)) == Rational(2 * n + 1));

    std::mt19937 rng(7206);
    for (int trial = 0; trial < 30; ++trial) {
        // integral characters (Z-combinations of sheaf classes) have P(n) in Z
        ChernCharacter v = testutil::random_integral_character(rng, 6);
        ChernCharacter w = testutil::random_character(rng, 6);
        HilbertPolynomial pv = hilbert_polynomial(v), pw = hilbert_polynomial(w),
                          psum = hilbert_polynomial(v + w);
        CHECK(pv.c3 == v[0] / 6);
        for (int n = -10; n <= 10; ++n) {
            Rational value = pv.eval(Rational(n));
            CHECK(is_integer(value));
            CHECK(psum.eval(Rational(n)) == value + pw.eval(Rational(n)));
        }
    }
}

TEST_CASE("reduced Hilbert polynomials") {
    ChernCharacter plane(0, 1, Rational(-1, 2), Rational(1, 6));
    CHECK(reduced_hilbert(plane, 2) == Poly{Rational(2), Rational(3), Rational(1)});
    CHECK(reduced_hilbert(plane, 1) == Poly{Rational(0), Rational(3), Rational(1)});

    // k = d is the plain monic normalization
    std::mt19937 rng(7207);
    for (int trial = 0; trial < 30; ++trial) {
        ChernCharacter v = testutil::random_character(rng, 5);
        int d = numerical_dimension(v);
        if (d < 1) continue;
        Poly full = hilbert_polynomial(v).to_poly();
        Poly monic = reduced_hilbert(v, d);
        CHECK(poly_degree(monic) == d);
        for (size_t i = 0; i < full.size(); ++i)
            CHECK(monic[i] == full[i] / full[static_cast<size_t>(d)]);
    }

    CHECK(testutil::thrown_code([] { reduced_hilbert(ChernCharacter(), 1); }) == "ZeroCharacter");
    CHECK(testutil::thrown_code([&] { reduced_hilbert(plane, 3); }) == "KOutOfRange");
    CHECK(testutil::thrown_code([&] { reduced_hilbert(plane, 0); }) == "KOutOfRange");
    CHECK(testutil::thrown_code(
              [] { reduced_hilbert(ChernCharacter(0, 0, 0, 5), 1); }) == "KOutOfRange");
}

TEST_CASE("numerical dimension") {
    CHECK(numerical_dimension(ChernCharacter(0, 1, Rational(-1, 2), Rational(1, 6))) == 2);
    CHECK(numerical_dimension(ChernCharacter(0, 0, 2, 3)) == 1);
    CHECK(numerical_dimension(ChernCharacter(0, 0, 0, 5)) == 0);
    CHECK(numerical_dimension(ChernCharacter(-2, 0, 0, 0)) == 3);
    CHECK(numerical_dimension(ChernCharacter()) == -1);
}
