#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <polymap/cli.hpp>

#include "support/fixtures.hpp"

using namespace polymap;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Exit status of `POLYMAP_CLI <args>`, stdout discarded.  Returns -1 when no
// binary path is in the environment (the test is then skipped).
int run_cli(const std::string& args) {
    const char* bin = std::getenv("POLYMAP_CLI");
    if (bin == nullptr) return -1;
    std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return status < 0 ? 127 : WEXITSTATUS(status);
}

std::string polygon_path(const std::vector<Complex>& vertices, const std::string& name) {
    auto p = temp_file(name);
    write_text_file(p.string(), polygon_json(vertices));
    return p.string();
}

}  // namespace

TEST_CASE("cmd_solve certifies and writes the artifacts") {
    std::string poly = polygon_path(fixtures::lshape(), "polymap_cli_l.json");
    auto cert = temp_file("polymap_cli_l.cert.json");
    auto svg = temp_file("polymap_cli_l.svg");
    std::ostringstream out;
    REQUIRE(cmd_solve(poly, cert.string(), svg.string(), {}, out) == exit_ok);
    REQUIRE(out.str().find("exterior margin") != std::string::npos);
    REQUIRE(out.str().find("ear 0:") != std::string::npos);
    REQUIRE(std::filesystem::exists(cert));
    REQUIRE(slurp(svg).find("<svg") == 0);

    std::ostringstream vout;
    REQUIRE(cmd_verify(poly, cert.string(), {}, vout) == exit_ok);
    REQUIRE(vout.str().find("\"pass\": true") != std::string::npos);
}

TEST_CASE("cmd_solve classifies failures") {
    std::ostringstream out;
    SECTION("unreadable file") {
        REQUIRE(cmd_solve("/nonexistent/p.json", "", "", {}, out) == exit_bad_input);
    }
    SECTION("self-intersecting polygon") {
        std::string poly =
            polygon_path({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, "polymap_cli_bowtie.json");
        REQUIRE(cmd_solve(poly, "", "", {}, out) == exit_bad_input);
    }
    SECTION("unattainable margin is not-certified, not bad input") {
        std::string poly = polygon_path(fixtures::unit_square(), "polymap_cli_sq.json");
        SolveOptions opts;
        opts.min_margin = 10.0;  // no partition puts the zeros 11 units out
        REQUIRE(cmd_solve(poly, "", "", opts, out) == exit_not_certified);
        REQUIRE(out.str().find("not certified") != std::string::npos);
    }
}

TEST_CASE("cmd_verify rejects mismatched polygon and certificate") {
    std::string poly = polygon_path(fixtures::lshape(), "polymap_cli_l2.json");
    auto cert = temp_file("polymap_cli_l2.cert.json");
    std::ostringstream out;
    REQUIRE(cmd_solve(poly, cert.string(), "", {}, out) == exit_ok);

    std::string other = polygon_path(fixtures::unit_square(), "polymap_cli_sq2.json");
    std::ostringstream vout;
    REQUIRE(cmd_verify(other, cert.string(), {}, vout) == exit_bad_input);

    // A certificate whose angle list is not strictly increasing cannot name
    // a partition; that is bad input, not a failed verification.
    std::string text = slurp(cert);
    auto pos = text.find("\"angles\": [\n    0,\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"angles\": [\n    0,\n").size(), "\"angles\": [\n    9,\n");
    auto tampered = temp_file("polymap_cli_l2.tampered.json");
    write_text_file(tampered.string(), text);
    std::ostringstream bad;
    REQUIRE(cmd_verify(poly, tampered.string(), {}, bad) == exit_bad_input);
    REQUIRE(cmd_verify(poly, "/nonexistent/cert.json", {}, bad) == exit_bad_input);
}

TEST_CASE("cmd_ears lists ears as JSON") {
    std::string poly = polygon_path(fixtures::comb3(), "polymap_cli_comb.json");
    std::ostringstream out;
    REQUIRE(cmd_ears(poly, out) == exit_ok);
    REQUIRE(out.str().find("\"ears\"") != std::string::npos);
    REQUIRE(out.str().find("\"robustness\"") != std::string::npos);
}

TEST_CASE("cmd_los_table validates and emits CSV") {
    std::ostringstream out;
    REQUIRE(cmd_los_table(1.0, 2.0, {pi / 2}, {1e-6}, out) == exit_ok);
    std::string csv = out.str();
    REQUIRE(csv.rfind("angle,y,omega_over_y,limit,abs_error\n", 0) == 0);
    REQUIRE(csv.find("\n1.5707") != std::string::npos);

    std::ostringstream bad;
    REQUIRE(cmd_los_table(-1.0, 2.0, {pi / 2}, {1e-6}, bad) == exit_bad_input);
    REQUIRE(cmd_los_table(1.0, 2.0, {4.0}, {1e-6}, bad) == exit_bad_input);
    REQUIRE(cmd_los_table(1.0, 2.0, {pi / 2}, {0.0}, bad) == exit_bad_input);
}

TEST_CASE("installed binary honors the exit-code contract") {
    if (std::getenv("POLYMAP_CLI") == nullptr) {
        SUCCEED("POLYMAP_CLI not set; subprocess smoke skipped");
        return;
    }
    std::string poly = polygon_path(fixtures::lshape(), "polymap_cli_bin.json");
    auto cert = temp_file("polymap_cli_bin.cert.json");

    REQUIRE(run_cli("solve " + poly + " --out " + cert.string()) == 0);
    REQUIRE(run_cli("verify " + poly + " " + cert.string()) == 0);
    REQUIRE(run_cli("ears " + poly) == 0);
    REQUIRE(run_cli("render " + poly + " " + cert.string() + " --grid 2x4 --svg " +
                    temp_file("polymap_cli_bin.svg").string()) == 0);
    REQUIRE(run_cli("los-table --A 1 --B 2") == 0);

    REQUIRE(run_cli("solve /nonexistent/p.json") == 3);
    REQUIRE(run_cli("render " + poly + " /nonexistent/cert.json") == 3);
    REQUIRE(run_cli("los-table --A -1 --B 2") == 3);
    REQUIRE(run_cli("frobnicate") == 3);
    REQUIRE(run_cli("--help") == 0);
}
