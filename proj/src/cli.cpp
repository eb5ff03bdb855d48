#include "p3stab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>

#include "p3stab/asymptotics.hpp"
#include "p3stab/figure.hpp"

namespace p3stab {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "p3stab/1";

Json doc(const char* command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

Json jrat(const Rational& r) { return to_string(r); }

Json jchar(const ChernCharacter& v) {
    return Json::array({to_string(v[0]), to_string(v[1]), to_string(v[2]), to_string(v[3])});
}

Json jpoly(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p) arr.push_back(to_string(c));
    return arr; // coefficients by ascending degree
}

Json jplane(const PlanePoly& p) {
    Json arr = Json::array();
    for (size_t j = 0; j < p.by_a.size(); ++j) {
        Json term;
        term["a"] = j;
        term["beta"] = jpoly(p.by_a[j]);
        arr.push_back(term);
    }
    return arr;
}

Json jroot(const QuadRoot& r) {
    if (r.exact) return to_string(r.value);
    Json j;
    j["base"] = to_string(r.value);
    j["radicand"] = to_string(r.radicand);
    j["sign"] = r.pm > 0 ? "+" : "-";
    j["decimal"] = decimal_sig(quadroot_approx(r, 24), 12);
    return j;
}

Json jgeometry(const TiltWallGeometry& g) {
    Json j;
    j["x"] = jrat(g.x);
    j["y"] = jrat(g.y);
    j["z"] = jrat(g.z);
    switch (g.kind) {
    case TiltWallGeometry::Kind::Semicircle:
        j["kind"] = "semicircle";
        j["center"] = jrat(g.center);
        j["radius2"] = jrat(g.radius2);
        break;
    case TiltWallGeometry::Kind::VerticalRay:
        j["kind"] = "vertical_ray";
        j["beta"] = jrat(g.ray_beta);
        break;
    case TiltWallGeometry::Kind::Empty:
        j["kind"] = "empty";
        break;
    case TiltWallGeometry::Kind::Degenerate:
        j["kind"] = "degenerate";
        break;
    }
    return j;
}

std::string ordering_name(Ordering o) {
    return o == Ordering::Less ? "less" : (o == Ordering::Greater ? "greater" : "equal");
}

std::vector<ChernCharacter> read_candidates(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UsageError", "cannot open candidate file '" + path + "'");
    std::vector<ChernCharacter> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(parse_character(line));
    }
    return out;
}

CurveRequest parse_curve_request(const std::string& text, int index,
                                 const std::string& global_s) {
    CurveRequest req;
    std::string kind, w_text, v_text, s_text = global_s;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != ';') continue;
        std::string item = text.substr(start, i - start);
        start = i + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail("UsageError", "curve items are key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "kind") kind = value;
        else if (key == "w") w_text = value;
        else if (key == "v") v_text = value;
        else if (key == "s") s_text = value;
        else if (key == "id") req.id = value;
        else fail("UsageError", "unknown curve key '" + key + "'");
    }
    if (kind == "theta") req.kind = CurveRequest::Kind::Theta;
    else if (kind == "l") req.kind = CurveRequest::Kind::LLine;
    else if (kind == "gamma") req.kind = CurveRequest::Kind::Gamma;
    else if (kind == "tilt") req.kind = CurveRequest::Kind::TiltWall;
    else if (kind == "bridgeland") req.kind = CurveRequest::Kind::BridgelandWall;
    else fail("UsageError", "curve kind must be theta|l|gamma|tilt|bridgeland");
    if (w_text.empty()) fail("UsageError", "curve '" + kind + "' needs w=...");
    req.w = parse_character(w_text);
    if (!v_text.empty()) req.v = parse_character(v_text);
    if (!s_text.empty()) req.s = parse_rational(s_text);
    if (req.id.empty()) req.id = kind + std::to_string(index);
    return req;
}

// Storage shared between option registration and callbacks; lives for the
// duration of one run_cli call.
struct Flags {
    std::string ch, v, w, u, beta, alpha2, alpha, s, cgamma = "0", side;
    std::string bmin, bmax, maxim, maxq, out_path, alpha_max, cand_path;
    std::vector<std::string> curve_texts;
    long k = 0;
    int ik = 0, di = 0, dj = 0, samples = 121;
    bool strict = false;

    HalfPlanePoint point() const {
        if (alpha2.empty() && alpha.empty())
            fail("UsageError", "one of --alpha2/--alpha is required");
        Rational a = alpha2.empty() ? rat_pow(parse_rational(alpha), 2) : parse_rational(alpha2);
        return {parse_rational(beta), a};
    }
    void attach_point(CLI::App* cmd) {
        cmd->add_option("--beta", beta, "beta coordinate (rational)")->required();
        auto* a2 = cmd->add_option("--alpha2", alpha2, "a = alpha^2 (rational)");
        auto* a1 = cmd->add_option("--alpha", alpha, "alpha, squared on input");
        a2->excludes(a1);
    }
    StabilityParam sparam() const { return StabilityParam(parse_rational(s)); }
    CurveClass curve_class() const {
        return {side == "left" ? Side::LeftInfinity : Side::RightInfinity,
                parse_rational(cgamma)};
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tilt/Bridgeland slopes, walls and asymptotic stability on P^3"};
    app.require_subcommand(1);
    Json result;
    Flags f;

    // chern ---------------------------------------------------------------
    auto* chern = app.add_subcommand("chern", "lattice arithmetic on Chern characters");
    chern->require_subcommand(1);

    auto* cparse = chern->add_subcommand("parse", "validate and echo a character");
    cparse->add_option("--ch", f.ch)->required();
    cparse->callback([&] {
        result = doc("chern.parse");
        result["ch"] = jchar(parse_character(f.ch));
    });

    auto* ctwist = chern->add_subcommand("twist", "twisted character ch^beta");
    ctwist->add_option("--ch", f.ch)->required();
    ctwist->add_option("--beta", f.beta)->required();
    ctwist->callback([&] {
        result = doc("chern.twist");
        TwistedCharacter t = twist(parse_character(f.ch), parse_rational(f.beta));
        result["beta"] = jrat(t.beta);
        result["ch_beta"] = Json::array({to_string(t.ch[0]), to_string(t.ch[1]),
                                         to_string(t.ch[2]), to_string(t.ch[3])});
    });

    auto* ctensor = chern->add_subcommand("tensor", "tensor with O(k)");
    ctensor->add_option("--ch", f.ch)->required();
    ctensor->add_option("--k", f.k)->required();
    ctensor->callback([&] {
        result = doc("chern.tensor");
        result["ch"] = jchar(tensor_line(parse_character(f.ch), f.k));
    });

    auto* cdual = chern->add_subcommand("dual", "shifted derived dual");
    cdual->add_option("--ch", f.ch)->required();
    cdual->callback([&] {
        result = doc("chern.dual");
        result["ch"] = jchar(dual(parse_character(f.ch)));
    });

    auto* cdelta = chern->add_subcommand("delta", "ch_i(v)ch_j(w) - ch_j(v)ch_i(w)");
    cdelta->add_option("--i", f.di)->required();
    cdelta->add_option("--j", f.dj)->required();
    cdelta->add_option("--v", f.v)->required();
    cdelta->add_option("--w", f.w)->required();
    cdelta->callback([&] {
        result = doc("chern.delta");
        result["value"] = jrat(delta(f.di, f.dj, parse_character(f.v), parse_character(f.w)));
    });

    auto* cqt = chern->add_subcommand("qtilt", "Bogomolov discriminant");
    cqt->add_option("--ch", f.ch)->required();
    cqt->callback([&] {
        result = doc("chern.qtilt");
        result["value"] = jrat(q_tilt(parse_character(f.ch)));
    });

    auto* cqb = chern->add_subcommand("qbmt", "generalized Bogomolov form");
    cqb->add_option("--ch", f.ch)->required();
    f.attach_point(cqb);
    cqb->callback([&] {
        result = doc("chern.qbmt");
        result["value"] = jrat(q_bmt(parse_character(f.ch), f.point()));
    });

    // slope -----------------------------------------------------------------
    auto* slope = app.add_subcommand("slope", "mu / nu / lambda slopes");
    slope->require_subcommand(1);

    auto* smu = slope->add_subcommand("mu", "classical slope");
    smu->add_option("--ch", f.ch)->required();
    smu->callback([&] {
        result = doc("slope.mu");
        result["value"] = to_string(mu(parse_character(f.ch)));
    });

    auto* snu = slope->add_subcommand("nu", "tilt slope");
    snu->add_option("--ch", f.ch)->required();
    f.attach_point(snu);
    snu->callback([&] {
        result = doc("slope.nu");
        result["value"] = to_string(nu(parse_character(f.ch), f.point()));
    });

    auto* slam = slope->add_subcommand("lambda", "Bridgeland slope");
    slam->add_option("--ch", f.ch)->required();
    slam->add_option("--s", f.s)->required();
    f.attach_point(slam);
    slam->callback([&] {
        result = doc("slope.lambda");
        result["value"] = to_string(lambda(parse_character(f.ch), f.point(), f.sparam()));
    });

    // region ----------------------------------------------------------------
    auto* region = app.add_subcommand("region", "shift placing the object in the heart");
    region->add_option("--ch", f.ch)->required();
    f.attach_point(region);
    region->callback([&] {
        result = doc("region");
        result["shift"] = region_classify(parse_character(f.ch), f.point());
    });

    // hilbert ---------------------------------------------------------------
    auto* hil = app.add_subcommand("hilbert", "Hilbert polynomial and reductions");
    hil->add_option("--ch", f.ch)->required();
    auto* kopt = hil->add_option("--k", f.ik, "reduced polynomial truncation depth");
    hil->callback([&] {
        result = doc("hilbert");
        ChernCharacter v = parse_character(f.ch);
        HilbertPolynomial p = hilbert_polynomial(v);
        result["coefficients"] = Json::array({jrat(p.c3), jrat(p.c2), jrat(p.c1), jrat(p.c0)});
        result["dimension"] = numerical_dimension(v);
        if (kopt->count()) result["reduced"] = jpoly(reduced_hilbert(v, f.ik));
    });

    // wall ------------------------------------------------------------------
    auto* wall = app.add_subcommand("wall", "tilt and Bridgeland numerical walls");
    wall->require_subcommand(1);

    auto* wtilt = wall->add_subcommand("tilt", "nu-wall geometry");
    wtilt->add_option("--v", f.v)->required();
    wtilt->add_option("--w", f.w)->required();
    wtilt->callback([&] {
        result = doc("wall.tilt");
        result.update(jgeometry(tilt_wall(parse_character(f.v), parse_character(f.w))));
    });

    auto* wbr = wall->add_subcommand("bridgeland", "lambda-wall quartic");
    wbr->add_option("--v", f.v)->required();
    wbr->add_option("--w", f.w)->required();
    wbr->add_option("--s", f.s)->required();
    wbr->callback([&] {
        result = doc("wall.bridgeland");
        QuarticWall q = bridgeland_wall(parse_character(f.v), parse_character(f.w), f.sparam());
        result["a2"] = jrat(q.A);
        result["a1"] = Json::array({jrat(q.B2), jrat(q.B1), jrat(q.B0)});
        result["a0"] = Json::array({jrat(q.C4), jrat(q.C3), jrat(q.C2), jrat(q.C1), jrat(q.C0)});
        result["poly"] = jplane(q.poly());
    });

    auto* wsec = wall->add_subcommand("section", "positive roots in a at fixed beta");
    wsec->add_option("--v", f.v)->required();
    wsec->add_option("--w", f.w)->required();
    wsec->add_option("--s", f.s)->required();
    wsec->add_option("--beta", f.beta)->required();
    wsec->callback([&] {
        result = doc("wall.section");
        QuarticWall q = bridgeland_wall(parse_character(f.v), parse_character(f.w), f.sparam());
        Json roots = Json::array();
        for (const auto& r : wall_section(q, parse_rational(f.beta))) roots.push_back(jroot(r));
        result["a"] = roots;
    });

    // curve -----------------------------------------------------------------
    auto* curve = app.add_subcommand("curve", "distinguished curves L / Theta / Gamma");
    curve->require_subcommand(1);
    auto add_curve = [&](const char* name, CurveKind kind, bool needs_s) {
        auto* c = curve->add_subcommand(name);
        c->add_option("--w", f.w)->required();
        if (needs_s) c->add_option("--s", f.s)->required();
        c->callback([&result, &f, kind, needs_s] {
            result = doc("curve");
            std::optional<StabilityParam> sp;
            if (needs_s) sp = f.sparam();
            CurveDescriptor d = distinguished_curve(kind, parse_character(f.w), sp);
            result["kind"] = kind == CurveKind::LLine
                                 ? "l"
                                 : (kind == CurveKind::ThetaCurve ? "theta" : "gamma");
            result["poly"] = jplane(d.poly);
        });
    };
    add_curve("theta", CurveKind::ThetaCurve, false);
    add_curve("l", CurveKind::LLine, false);
    add_curve("gamma", CurveKind::GammaCurve, true);

    // enumerate ---------------------------------------------------------------
    auto* en = app.add_subcommand("enumerate", "tilt walls meeting a search window");
    en->add_option("--v", f.v)->required();
    en->add_option("--beta-min", f.bmin)->required();
    en->add_option("--beta-max", f.bmax)->required();
    en->add_option("--max-imaginary", f.maxim)->required();
    en->add_option("--max-qtilt", f.maxq)->required();
    en->callback([&] {
        result = doc("enumerate");
        WallWindow win(parse_rational(f.bmin), parse_rational(f.bmax), parse_rational(f.maxim),
                       parse_rational(f.maxq));
        Json walls = Json::array();
        for (const auto& [u, g] : enumerate_tilt_walls(parse_character(f.v), win)) {
            Json j;
            j["w"] = jchar(u);
            j.update(jgeometry(g));
            walls.push_back(j);
        }
        result["walls"] = walls;
    });

    // asym ------------------------------------------------------------------
    auto* asym = app.add_subcommand("asym", "asymptotic comparison and classification");
    asym->require_subcommand(1);

    auto* acmp = asym->add_subcommand("compare", "sign of the asymptotic slope difference");
    acmp->add_option("--side", f.side)->required()->check(CLI::IsMember({"left", "right"}));
    acmp->add_option("--cgamma", f.cgamma);
    acmp->add_option("--s", f.s)->required();
    acmp->add_option("--v", f.v)->required();
    acmp->add_option("--u", f.u)->required();
    acmp->callback([&] {
        result = doc("asym.compare");
        AsymOrdering o = asym_compare_lambda(parse_character(f.v), parse_character(f.u),
                                             f.curve_class(), f.sparam());
        result["sign"] = ordering_name(o.sign);
        result["order"] = o.order;
        result["leading"] = jrat(o.leading);
        result["infinite_slopes"] = o.infinite_slopes;
    });

    auto* acls = asym->add_subcommand("classify", "verdict against a candidate file");
    acls->add_option("--side", f.side)->required()->check(CLI::IsMember({"left", "right"}));
    acls->add_option("--cgamma", f.cgamma);
    acls->add_option("--s", f.s)->required();
    acls->add_option("--v", f.v)->required();
    acls->add_option("--candidates", f.cand_path)->required();
    acls->add_flag("--strict", f.strict);
    acls->callback([&] {
        result = doc("asym.classify");
        auto candidates = read_candidates(f.cand_path);
        ChernCharacter v = parse_character(f.v);
        Rational cg = parse_rational(f.cgamma);
        Verdict verdict = f.side == "left"
                              ? classify_left(v, f.sparam(), candidates, f.strict, cg)
                              : classify_right(v, f.sparam(), candidates, f.strict, cg);
        result["verdict"] = to_string(verdict.kind);
        if (verdict.by) result["by"] = jchar(*verdict.by);
        if (!verdict.reason.empty()) result["reason"] = verdict.reason;
    });

    // plot ------------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "emit curves as CSV or SVG");
    plot->add_option("--out", f.out_path, "output file, .csv or .svg")->required();
    plot->add_option("--beta-min", f.bmin)->required();
    plot->add_option("--beta-max", f.bmax)->required();
    plot->add_option("--samples", f.samples);
    plot->add_option("--s", f.s, "default stability parameter for walls");
    plot->add_option("--alpha-max", f.alpha_max, "vertical extent for vertical curves");
    plot->add_option("--curve", f.curve_texts,
                     "kind=theta|l|gamma|tilt|bridgeland;w=...;[v=...;s=...;id=...]")
        ->required();
    plot->callback([&] {
        FigureSpec spec;
        spec.beta_min = parse_rational(f.bmin);
        spec.beta_max = parse_rational(f.bmax);
        spec.samples = f.samples;
        if (!f.alpha_max.empty()) spec.alpha_max = parse_rational(f.alpha_max);
        int index = 0;
        for (const auto& text : f.curve_texts)
            spec.curves.push_back(parse_curve_request(text, index++, f.s));
        bool svg = f.out_path.size() >= 4 && f.out_path.substr(f.out_path.size() - 4) == ".svg";
        bool csv = f.out_path.size() >= 4 && f.out_path.substr(f.out_path.size() - 4) == ".csv";
        if (!svg && !csv) fail("UsageError", "--out must end in .csv or .svg");
        spec.format = svg ? FigureSpec::Format::Svg : FigureSpec::Format::Csv;
        std::string bytes = emit_figure(spec);
        std::ofstream file(f.out_path, std::ios::binary);
        if (!file) fail("UsageError", "cannot write '" + f.out_path + "'");
        file << bytes;
        result = doc("plot");
        result["written"] = f.out_path;
        result["bytes"] = bytes.size();
    });

    std::vector<const char*> argv;
    argv.push_back("p3stab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        Json j;
        j["schema"] = kSchema;
        j["error"]["code"] = e.code();
        j["error"]["message"] = e.what();
        err << j.dump(2) << "\n";
        return 2;
    }
    out << result.dump(2) << "\n";
    return 0;
}

} // namespace p3stab
