#include <doctest.h>
#include <json.hpp>

#include "numrad/matrix.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/cartesian.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace numrad;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" NUMRAD_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("numrad_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

const char* kGeneral =
    "3\n"
    "1+2i 0.5 0-1i\n"
    "0.25-0.5i -2 3\n"
    "1 1+1i 0+0.75i\n";

const char* kSmallSuite =
    "checks = basic_bounds, lemma_offdiag, prop_schatten\n"
    "dims = 2-4\n"
    "trials = 5\n";

}  // namespace

TEST_CASE("radius on a square-zero matrix") {
    const std::string f = write_file("shift.txt", "2\n0 1\n0 0\n");
    const Run r = run("radius " + f + " --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j.at("lower").get<double>() - 0.5) <= 1e-9);
    CHECK(j.at("upper").get<double>() >= 0.5);
    CHECK(j.at("method") == "theta");

    const Run c = run("radius " + f + " --json --method circle");
    CHECK(c.code == 0);
    CHECK(std::abs(nlohmann::json::parse(c.out).at("midpoint").get<double>() - 0.5) <= 1e-9);

    const Run text = run("radius " + f);
    CHECK(text.code == 0);
    CHECK(text.out.find("0.5") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("radius /nonexistent/matrix.txt").code == 2);
    CHECK(run("radius " + write_file("bad.txt", "2\n1 x\n0 0\n")).code == 2);
    CHECK(run("radius " + write_file("short.txt", "3\n1 0 0\n0 1 0\n")).code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("radius " + write_file("g.txt", kGeneral) + " --tol 1e-20").code == 3);
    CHECK(run("verify --config " + write_file("bad.cfg", "colour = blue\n")).code == 2);
    CHECK(run("verify --config " + write_file("zero.cfg", "trials = 0\n")).code == 0);
    CHECK(run("repro-example").code == 0);
    CHECK(run("repro-example --strict-margin 0.5").code == 4);
}

TEST_CASE("full precision round-trips the decomposition") {
    const std::string f = write_file("g17.txt", kGeneral);
    const Run r = run("decompose " + f);
    REQUIRE(r.code == 0);
    const std::vector<ComplexMatrix> blocks = parse_matrix_sequence(r.out);
    REQUIRE(blocks.size() == 2);
    const ComplexMatrix t = parse_matrix(kGeneral);
    const Complex i(0.0, 1.0);
    CHECK(max_entry_diff(blocks[0] + i * blocks[1], t) <= 1e-14);
    CHECK(max_entry_diff(blocks[0], adjoint(blocks[0])) == 0.0);
    CHECK(max_entry_diff(blocks[1], adjoint(blocks[1])) == 0.0);
}

TEST_CASE("fov CSV") {
    const std::string f = write_file("fov.txt", kGeneral);
    const Run r = run("fov " + f + " --angles 64 --out csv --full-precision");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "theta,re,im,support_value");
    const double w = nlohmann::json::parse(run("radius " + f + " --json").out).at("upper").get<double>();
    int rows = 0;
    double best = 0.0;
    while (std::getline(in, line)) {
        double theta, re, im, support;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &theta, &re, &im, &support) == 4);
        // the boundary point attains the support value in its direction
        CHECK(std::abs(re * std::cos(theta) - im * std::sin(theta) - support) <= 1e-9);
        CHECK(std::hypot(re, im) <= w + 1e-9);
        best = std::max(best, support);
        ++rows;
    }
    CHECK(rows == 64);
    CHECK(best <= w + 1e-9);
    CHECK(best >= w * std::cos(M_PI / 64.0) - 1e-9);
    CHECK(run("fov " + f + " --angles 3").code == 2);
}

TEST_CASE("verify output is deterministic and honours NUMRAD_SEED") {
    const std::string cfg = write_file("small.cfg", kSmallSuite);
    const Run a = run("verify --config " + cfg + " --no-wall-time");
    const Run b = run("verify --config " + cfg + " --no-wall-time --serial");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("SUITE PASS failures=0") != std::string::npos);

    const Run seeded = run("verify --config " + cfg + " --no-wall-time", "NUMRAD_SEED=12345");
    CHECK(seeded.code == 0);
    CHECK(seeded.out != a.out);
    CHECK(seeded.out.find("12345") != std::string::npos);
    CHECK(run("verify --config " + cfg, "NUMRAD_SEED=abc").code == 2);

    const Run j = run("verify --config " + cfg + " --json");
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("status") == "PASS");
    CHECK(doc.at("checks").size() == 3);
}

TEST_CASE("repro-example JSON") {
    const Run r = run("repro-example --json --full-precision");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j.at("norm_A_plus_B").get<double>() - 1.0) <= 1e-10);
    CHECK(std::abs(j.at("rayleigh_probe").get<double>() - std::sqrt(10.0) / 4.0) <= 1e-12);
    CHECK(j.at("strict_left").get<bool>());
    CHECK(j.at("strict_right").get<bool>());
}
