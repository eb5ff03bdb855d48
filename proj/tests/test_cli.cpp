#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "p3stab/cli.hpp"
#include "p3stab/rational.hpp"

using Json = nlohmann::json;

namespace {

struct RunResult {
    int status;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = p3stab::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

Json payload(const RunResult& r) {
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["schema"] == "p3stab/1");
    return j;
}

// black-box run of the installed binary when ctest provides it
int spawn_status(const std::string& extra_args) {
    const char* bin = std::getenv("P3STAB_BIN");
    if (!bin) return -1;
    std::string cmd = std::string(bin) + " " + extra_args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("slope commands") {
    Json lam = payload(run({"slope", "lambda", "--ch", "0,1,-1/2,1/6", "--beta", "-2",
                            "--alpha2", "1", "--s", "1/3"}));
    CHECK(lam["value"] == "4/9");

    Json m = payload(run({"slope", "mu", "--ch", "0,0,2,3"}));
    CHECK(m["value"] == "inf");

    Json n = payload(run({"slope", "nu", "--ch", "0,1,-1/2,1/6", "--beta", "0", "--alpha", "2"}));
    CHECK(n["value"] == "-1/2");
}

TEST_CASE("wall section reproduces the worked crossing") {
    Json sec = payload(run({"wall", "section", "--v", "1,3,9/2,9/2", "--w", "0,0,2,3", "--s",
                            "1/3", "--beta", "3/2"}));
    REQUIRE(sec["a"].size() == 1);
    CHECK(sec["a"][0] == "3/4");
}

TEST_CASE("chern and region commands") {
    Json tw = payload(run({"chern", "twist", "--ch", "0,1,-1/2,1/6", "--beta", "-2"}));
    CHECK(tw["ch_beta"] == Json::array({"0", "1", "3/2", "7/6"}));

    Json du = payload(run({"chern", "dual", "--ch", "0,0,2,-3"}));
    CHECK(du["ch"] == Json::array({"0", "0", "2", "3"}));

    Json qt = payload(run({"chern", "qtilt", "--ch", "2,0,-2,0"}));
    CHECK(qt["value"] == "8");

    Json rg = payload(run({"region", "--ch", "1,0,0,0", "--beta", "-1", "--alpha2", "2"}));
    CHECK(rg["shift"] == 1);

    Json hi = payload(run({"hilbert", "--ch", "0,1,-1/2,1/6", "--k", "2"}));
    CHECK(hi["dimension"] == 2);
    CHECK(hi["reduced"] == Json::array({"2", "3", "1"}));
}

TEST_CASE("asym commands") {
    Json cmp = payload(run({"asym", "compare", "--side", "left", "--cgamma", "0", "--s", "1/3",
                            "--v", "0,1,-1/2,1/6", "--u", "0,0,1,-1"}));
    CHECK(cmp["sign"] == "less");
    CHECK(cmp["order"] == 1);
    CHECK(cmp["leading"] == "-1/2");

    std::string path = "cli_candidates.txt";
    {
        std::ofstream f(path);
        f << "# destabilizing torsion candidate\n0,0,1,-1\n\n";
    }
    Json cls = payload(run({"asym", "classify", "--side", "left", "--s", "1/3", "--v",
                            "0,1,-1/2,1/6", "--candidates", path}));
    CHECK(cls["verdict"] == "destabilized");
    CHECK(cls["by"] == Json::array({"0", "0", "1", "-1"}));
    std::remove(path.c_str());
}

TEST_CASE("enumerate command") {
    Json en = payload(run({"enumerate", "--v", "2,0,-2,0", "--beta-min", "-3", "--beta-max", "0",
                           "--max-imaginary", "4", "--max-qtilt", "16"}));
    bool found = false;
    for (const auto& w : en["walls"])
        if (w["kind"] == "semicircle" && w["center"] == "-3/2" && w["radius2"] == "1/4")
            found = true;
    CHECK(found);
}

TEST_CASE("emitted rationals round-trip exactly") {
    Json lam = payload(run({"slope", "lambda", "--ch", "3,1,-5/2,7/6", "--beta", "-7/3",
                            "--alpha2", "22/7", "--s", "2/5"}));
    std::string text = lam["value"].get<std::string>();
    p3stab::Rational parsed = p3stab::parse_rational(text);
    CHECK(p3stab::to_string(parsed) == text);

    // determinism of the whole document
    RunResult r1 = run({"wall", "bridgeland", "--v", "1,3,9/2,9/2", "--w", "0,0,2,3", "--s", "1/3"});
    RunResult r2 = run({"wall", "bridgeland", "--v", "1,3,9/2,9/2", "--w", "0,0,2,3", "--s", "1/3"});
    CHECK(r1.out == r2.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"slope", "mu", "--ch", "0,0,2,3"}).status == 0);
    CHECK(run({"slope", "mu"}).status == 1);              // missing required flag
    CHECK(run({"slope", "mu", "--bogus", "1"}).status == 1);
    CHECK(run({"nonsense"}).status == 1);
    CHECK(run({}).status == 1);
    CHECK(run({"slope", "mu", "--ch", "0,0,0,0"}).status == 2);   // domain error
    CHECK(run({"slope", "mu", "--ch", "1,0,1/3,0"}).status == 2); // lattice violation
    RunResult dom = run({"slope", "mu", "--ch", "0,0,0,0"});
    Json e = Json::parse(dom.err);
    CHECK(e["error"]["code"] == "ZeroCharacter");
    CHECK(run({"--help"}).status == 0);

    if (std::getenv("P3STAB_BIN")) { // black-box: the real process exit codes
        CHECK(spawn_status("slope mu --ch 0,0,2,3") == 0);
        CHECK(spawn_status("slope mu") == 1);
        CHECK(spawn_status("slope mu --ch 0,0,0,0") == 2);
    }
}

TEST_CASE("plot command writes figures") {
    std::string path = "cli_fig.csv";
    Json p = payload(run({"plot", "--out", path, "--beta-min", "-4", "--beta-max", "4",
                          "--samples", "17", "--curve", "kind=theta;w=2,0,-2,0;id=th",
                          "--curve", "kind=l;w=2,0,-2,0"}));
    CHECK(p["written"] == path);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "curve_id,beta,alpha");
    std::remove(path.c_str());

    CHECK(run({"plot", "--out", "x.txt", "--beta-min", "0", "--beta-max", "1", "--curve",
               "kind=theta;w=2,0,-2,0"})
              .status == 2);
}
