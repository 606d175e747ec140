#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/cli.hpp"
#include "crn/parser.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace crn;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(CRN_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

bool classifications_equal(const Classification& a, const Classification& b) {
    if (a.steady_state_count != b.steady_state_count || a.stable_count != b.stable_count ||
        a.degenerate_continuum != b.degenerate_continuum)
        return false;
    if (a.discriminant.has_value() != b.discriminant.has_value()) return false;
    if (a.discriminant &&
        (a.discriminant->value != b.discriminant->value ||
         a.discriminant->effective_degree != b.discriminant->effective_degree))
        return false;
    if (!(a.coefficients.S0 == b.coefficients.S0 && a.coefficients.S1 == b.coefficients.S1 &&
          a.coefficients.S2 == b.coefficients.S2 && a.coefficients.S3 == b.coefficients.S3))
        return false;
    if (a.roots.size() != b.roots.size()) return false;
    for (size_t i = 0; i < a.roots.size(); ++i) {
        if (a.roots[i].lo != b.roots[i].lo || a.roots[i].hi != b.roots[i].hi ||
            a.roots[i].value != b.roots[i].value ||
            a.roots[i].multiplicity != b.roots[i].multiplicity ||
            a.roots[i].stability != b.roots[i].stability)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("info reports the structural summary") {
    RunResult square = run_cli({"info", fixture_path("square.crn")});
    CHECK(square.code == 0);
    CHECK(square.out == "n=4 l=1 s=2 deficiency=2 reversible=yes mass-preserving=yes\n");

    RunResult vertical = run_cli({"info", fixture_path("vertical.crn")});
    CHECK(vertical.code == 0);
    CHECK(vertical.out == "n=4 l=2 s=2 deficiency=1 reversible=yes mass-preserving=yes\n");
}

TEST_CASE("info on a missing file is a domain error") {
    RunResult r = run_cli({"info", "/nonexistent/path.crn"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and a line number") {
    std::string path = temp_file("crn_cli_bad.crn");
    std::ofstream(path) << "A -> B\nA -> A\n";
    RunResult r = run_cli({"info", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"no-such-command"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"classify"}).code == 1);  // missing --params
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("classify text output") {
    RunResult r = run_cli({"classify", "--params", fixture_path("bistable.params")});
    CHECK(r.code == 0);
    CHECK(r.out.find("S = (1, 6, 11, 6)") != std::string::npos);
    CHECK(r.out.find("p(x) = -x^3 + 6*x^2 - 11*x + 6") != std::string::npos);
    CHECK(r.out.find("D = 4") != std::string::npos);
    CHECK(r.out.find("steady states = 3, stable = 2") != std::string::npos);
    CHECK(r.out.find("x = 2  multiplicity 1  unstable") != std::string::npos);
}

TEST_CASE("classify on the printed variant reports one steady state") {
    RunResult r = run_cli({"classify", "--params", fixture_path("bistable_k32_1.params")});
    CHECK(r.code == 0);
    CHECK(r.out.find("p(x) = -x^3 + 6*x^2 - 11*x + 5") != std::string::npos);
    CHECK(r.out.find("D = -23") != std::string::npos);
    CHECK(r.out.find("steady states = 1, stable = 1") != std::string::npos);
}

TEST_CASE("classify --json round-trips") {
    RunResult r = run_cli({"classify", "--params", fixture_path("bistable.params"), "--json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    Classification reparsed = cli::classification_from_json(j);
    Classification direct = classify(parse_square_params(slurp(fixture_path("bistable.params"))));
    CHECK(classifications_equal(reparsed, direct));

    // degenerate continuum serializes too
    std::string path = temp_file("crn_cli_degenerate.params");
    std::ofstream(path) << "k41 = 2\nk43 = 1\nk23 = 2\nk21 = 1\n";
    RunResult degenerate = run_cli({"classify", "--params", path, "--json"});
    CHECK(degenerate.code == 0);
    Classification d = cli::classification_from_json(nlohmann::json::parse(degenerate.out));
    CHECK(d.degenerate_continuum);
    CHECK_FALSE(d.discriminant.has_value());
    std::remove(path.c_str());

    // semistable roots keep their label through the round trip
    std::string semi_path = temp_file("crn_cli_semistable.params");
    std::ofstream(semi_path) << "k14 = 1/5\nk23 = 7/5\nk32 = 3/5\nk41 = 1\n";
    RunResult semi = run_cli({"classify", "--params", semi_path, "--json"});
    CHECK(semi.code == 0);
    Classification s = cli::classification_from_json(nlohmann::json::parse(semi.out));
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0].stability == Stability::Semistable);
    CHECK(s.roots[0].multiplicity == 2);
    std::remove(semi_path.c_str());
}

TEST_CASE("classify of the trivial network is a domain error") {
    RunResult r = run_cli({"classify", "--params", fixture_path("trivial.params")});
    CHECK(r.code == 3);
    CHECK(r.err.find("trivial") != std::string::npos);
}

TEST_CASE("roots maps steady states onto the invariant line") {
    RunResult r = run_cli(
        {"roots", "--params", fixture_path("bistable.params"), "--total", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("steady states = 3, stable = 2, T = 4") != std::string::npos);
    CHECK(r.out.find("x = 1  stable  c = (2, 2)") != std::string::npos);
    CHECK(r.out.find("x = 2  unstable") != std::string::npos);
    CHECK(r.out.find("x = 3  stable  c = (3, 1)") != std::string::npos);
}

TEST_CASE("simulate writes a trajectory CSV") {
    std::string out_path = temp_file("crn_cli_traj.csv");
    RunResult r = run_cli({"simulate", "--params", fixture_path("bistable.params"),
                           "--init", "2.9,1.1", "--t-end", "50", "--dt", "0.001", "--out", out_path});
    CHECK(r.code == 0);
    auto at = r.out.find("final c = (");
    REQUIRE(at != std::string::npos);
    double c1 = 0, c2 = 0;
    REQUIRE(std::sscanf(r.out.c_str() + at, "final c = (%lf, %lf)", &c1, &c2) == 2);
    CHECK(c1 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(c2 == doctest::Approx(1.0).epsilon(1e-9));
    std::string csv = slurp(out_path);
    CHECK(csv.rfind("t,c_c1,c_c2\n0,2.9,1.1\n", 0) == 0);

    // identical invocation, identical bytes
    RunResult again = run_cli({"simulate", "--params", fixture_path("bistable.params"),
                               "--init", "2.9,1.1", "--t-end", "50", "--dt", "0.001", "--out", out_path});
    CHECK(again.out == r.out);
    CHECK(slurp(out_path) == csv);
    std::remove(out_path.c_str());
}

TEST_CASE("toric dispatches on the support") {
    RunResult segre = run_cli({"toric", "--params", fixture_path("segre.params")});
    CHECK(segre.code == 0);
    CHECK(segre.out.find("condition = segre") != std::string::npos);
    CHECK(segre.out.find("toric = yes") != std::string::npos);

    RunResult full = run_cli({"toric", "--params", fixture_path("bistable.params")});
    CHECK(full.code == 0);
    CHECK(full.out.find("condition = twisted-cubic-minors") != std::string::npos);
    CHECK(full.out.find("toric = no") != std::string::npos);

    std::string path = temp_file("crn_cli_sub1.params");
    std::ofstream(path) << "k12 = 1\nk14 = 1\nk21 = 1\nk23 = 1\nk32 = 1\nk41 = 1\n";
    RunResult sub1 = run_cli({"toric", "--params", path});
    CHECK(sub1.code == 0);
    CHECK(sub1.out.find("condition = subnetwork1-binomials") != std::string::npos);
    CHECK(sub1.out.find("toric = yes") != std::string::npos);
    std::remove(path.c_str());

    std::string lonely = temp_file("crn_cli_lonely.params");
    std::ofstream(lonely) << "k12 = 1\n";
    RunResult bad = run_cli({"toric", "--params", lonely});
    CHECK(bad.code == 3);
    std::remove(lonely.c_str());
}

TEST_CASE("enumerate prints the sixteen networks with witnesses") {
    RunResult r = run_cli({"enumerate"});
    CHECK(r.code == 0);
    CHECK(r.out.find("reversible multistationary networks = 16") != std::string::npos);
    CHECK(r.out.find("histogram: 2-edge: 1, 3-edge: 4, 4-edge: 6, 5-edge: 4, 6-edge: 1") !=
          std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 18);
    CHECK(r.out.find("witness (3 steady states)") != std::string::npos);
    CHECK(r.out.find("no witness") == std::string::npos);

    RunResult again = run_cli({"enumerate"});
    CHECK(again.out == r.out);
}

TEST_CASE("sweep writes the figure CSV") {
    std::string out_path = temp_file("crn_cli_sweep.csv");
    RunResult r = run_cli({"sweep", "--range", "k14=0.1:0.2:0.1", "--range", "k23=1:1:1",
                           "--range", "k32=0.3:0.3:1", "--out", out_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("wrote 2 records") != std::string::npos);
    CHECK(slurp(out_path) ==
          "k14,k23,k32,D_sign,count,stable,toric,disc_zero,triple\n"
          "0.1,1,0.3,-1,1,1,0,0,0\n"
          "0.2,1,0.3,-1,1,1,0,0,0\n");
    std::remove(out_path.c_str());

    RunResult missing = run_cli({"sweep", "--range", "k14=0.1:0.2:0.1", "--range", "k23=1:1:1",
                                 "--range", "k23=1:1:1", "--out", out_path});
    CHECK(missing.code == 3);
}

TEST_CASE("discriminant command") {
    RunResult vertical = run_cli({"discriminant", "--family", "vertical"});
    CHECK(vertical.code == 0);
    CHECK(vertical.out ==
          "-27*k14^2*k32^2 - 4*k14*k23^3 + 18*k14*k23*k32*k41 + k23^2*k41^2 - 4*k32*k41^3\n");

    RunResult count = run_cli({"discriminant", "--family", "general", "--terms-only"});
    CHECK(count.code == 0);
    CHECK(count.out == "213\n");  // 81+30+36+30+36 monomials over disjoint variable groups

    RunResult unknown = run_cli({"discriminant", "--family", "pentagon"});
    CHECK(unknown.code == 3);
}

TEST_CASE("hornjackson variants") {
    RunResult printed = run_cli({"hornjackson", "--variant", "printed", "--eps", "1/100"});
    CHECK(printed.code == 0);
    CHECK(printed.out.find("steady states = 1, stable = 1") != std::string::npos);
    CHECK(printed.out.find("k12=1/100") != std::string::npos);

    RunResult cycle = run_cli({"hornjackson", "--variant", "cycle", "--eps", "1/100"});
    CHECK(cycle.code == 0);
    CHECK(cycle.out.find("steady states = 3, stable = 2") != std::string::npos);

    RunResult zero = run_cli({"hornjackson", "--variant", "cycle", "--eps", "0"});
    CHECK(zero.code == 3);
}
