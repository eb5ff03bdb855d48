#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "p3stab/figure.hpp"

using namespace p3stab;
using testutil::thrown_code;

namespace {

FigureSpec figure1(FigureSpec::Format format) {
    FigureSpec spec;
    ChernCharacter instanton(2, 0, -2, 0);
    spec.curves.push_back({"l0", CurveRequest::Kind::LLine, instanton, {}, {}});
    spec.curves.push_back({"theta0", CurveRequest::Kind::Theta, instanton, {}, {}});
    spec.beta_min = Rational(-4);
    spec.beta_max = Rational(4);
    spec.samples = 33;
    spec.format = format;
    return spec;
}

FigureSpec figure3(FigureSpec::Format format) {
    FigureSpec spec;
    ChernCharacter o(1, 0, 0, 0), o3(1, 3, Rational(9, 2), Rational(9, 2));
    ChernCharacter pair(2, 3, Rational(5, 2), Rational(3, 2)), conic_dual(0, 0, 2, 3);
    spec.curves.push_back(
        {"upsilon_outer", CurveRequest::Kind::BridgelandWall, conic_dual, o3, Rational(1, 3)});
    spec.curves.push_back(
        {"upsilon_inner", CurveRequest::Kind::BridgelandWall, pair, o, Rational(1, 3)});
    spec.beta_min = Rational(0);
    spec.beta_max = Rational(3);
    spec.samples = 61;
    spec.format = format;
    return spec;
}

std::vector<std::array<std::string, 3>> parse_csv(const std::string& text) {
    std::vector<std::array<std::string, 3>> rows;
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == "curve_id,beta,alpha");
    while (std::getline(is, line)) {
        auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        REQUIRE(c2 != std::string::npos);
        rows.push_back({line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1),
                        line.substr(c2 + 1)});
    }
    return rows;
}

} // namespace

TEST_CASE("sampled curve points satisfy their equations") {
    ChernCharacter instanton(2, 0, -2, 0);
    PlanePoly theta = distinguished_curve(CurveKind::ThetaCurve, instanton).poly;
    auto pts = sample_curve(theta, "t", Rational(-3), Rational(-3, 2), 4, Rational(2));
    REQUIRE(pts.size() == 4);
    for (const auto& p : pts) {
        REQUIRE(p.a_exact);
        CHECK(p.beta * p.beta - p.a == 2);
        // the decimal alpha reproduces a to twelve digits
        Rational approx = parse_decimal(p.alpha);
        Rational residual = rat_abs(Rational(approx * approx - p.a));
        CHECK(residual * 100000000000LL < Rational(Integer(approx > 1 ? 4 : 1)));
    }

    PlanePoly l = distinguished_curve(CurveKind::LLine,
                                      ChernCharacter(1, 3, Rational(9, 2), Rational(9, 2)))
                      .poly;
    auto vertical = sample_curve(l, "l", Rational(0), Rational(4), 5, Rational(2));
    REQUIRE(vertical.size() == 5);
    for (const auto& p : vertical) CHECK(p.beta == 3);

    // endpoints-only sampling gives two rows per single-branch curve
    auto two = sample_curve(theta, "t", Rational(2), Rational(3), 2, Rational(1));
    CHECK(two.size() == 2);
}

TEST_CASE("figure-1 csv: byte stability and exactness") {
    std::string csv1 = emit_csv(figure1(FigureSpec::Format::Csv));
    std::string csv2 = emit_csv(figure1(FigureSpec::Format::Csv));
    CHECK(csv1 == csv2);

    ChernCharacter instanton(2, 0, -2, 0);
    PlanePoly theta = distinguished_curve(CurveKind::ThetaCurve, instanton).poly;
    int theta_rows = 0;
    for (const auto& row : parse_csv(csv1)) {
        if (row[0] != "theta0") continue;
        ++theta_rows;
        Rational beta = parse_decimal(row[1]), alpha = parse_decimal(row[2]);
        Rational f = rat_abs(plane_eval(theta, beta, alpha * alpha));
        Rational scale = plane_eval_abs(theta, beta, alpha * alpha);
        CHECK(f * 10000000000LL <= scale); // 1e-10 relative
    }
    CHECK(theta_rows > 10);
}

TEST_CASE("figure-3 walls pass through the known crossing") {
    std::string csv = emit_csv(figure3(FigureSpec::Format::Csv));
    int hits = 0;
    for (const auto& row : parse_csv(csv)) {
        if (row[1] != "1.50000000000") continue;
        if (row[2] == "0.866025403784") ++hits;
    }
    CHECK(hits == 2); // both walls pass through (3/2, sqrt(3)/2)
}

TEST_CASE("svg output is stable and well-formed") {
    std::string svg1 = emit_svg(figure1(FigureSpec::Format::Svg));
    std::string svg2 = emit_svg(figure1(FigureSpec::Format::Svg));
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
    CHECK(svg1.find("<rect") != std::string::npos);
    CHECK(svg1.find("<path") != std::string::npos);
    CHECK(svg1.find("theta0") != std::string::npos);
    CHECK(svg1.rfind("</svg>\n") == svg1.size() - 7);

    std::string svg3 = emit_svg(figure3(FigureSpec::Format::Svg));
    CHECK(svg3.find("upsilon_outer") != std::string::npos);
}

TEST_CASE("figure validation errors") {
    FigureSpec empty;
    empty.beta_min = Rational(0);
    empty.beta_max = Rational(1);
    CHECK(thrown_code([&] { emit_csv(empty); }) == "EmptyRange");

    FigureSpec bad = figure1(FigureSpec::Format::Csv);
    bad.beta_max = bad.beta_min;
    CHECK(thrown_code([&] { emit_csv(bad); }) == "EmptyRange");

    FigureSpec one = figure1(FigureSpec::Format::Csv);
    one.samples = 1;
    CHECK(thrown_code([&] { emit_csv(one); }) == "EmptyRange");

    CHECK(thrown_code([&] {
              sample_curve(PlanePoly{}, "x", Rational(0), Rational(1), 3, Rational(1));
          }) == "IdenticallyZero");
    PlanePoly ok;
    ok.by_a = {Poly{Rational(1), Rational(1)}};
    CHECK(thrown_code([&] {
              sample_curve(ok, "bad id!", Rational(0), Rational(1), 3, Rational(1));
          }) == "BadCurveId");
}
