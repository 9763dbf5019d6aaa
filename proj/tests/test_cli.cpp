#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string("\"") + QGEO_BIN_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// value after "key = " on its own line
double grab(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + needle.size()));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string tmp_dir = "cli_tmp";

struct TmpDirSetup {
    TmpDirSetup() { std::filesystem::create_directories(tmp_dir); }
} tmp_dir_setup;

}  // namespace

TEST_CASE("cli: metric command") {
    const RunResult r = run("metric --bloch 0.8,0,0 --axis z");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(grab(r.output, "metric") - 3.2) < 1e-12);
    CHECK(r.output.find("tangent[0][1]") != std::string::npos);
    CHECK(r.output.find("state_eigenvalues") != std::string::npos);

    const RunResult zero = run("metric --bloch 0,0,0.5 --axis z");
    CHECK(zero.exit_code == 0);
    CHECK(grab(zero.output, "metric") == 0.0);
}

TEST_CASE("cli: metric domain errors exit 1") {
    const RunResult r = run("metric --bloch 1.5,0,0 --axis z");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("Bloch vector outside ball") != std::string::npos);

    const RunResult pure = run("metric --bloch 1,0,0 --axis z");
    CHECK(pure.exit_code == 1);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("metric").exit_code == 2);                        // missing --bloch
    CHECK(run("metric --bloch 0.8,0 --axis z").exit_code == 2); // two components
    CHECK(run("metric --bloch 0.8,0,0 --axis w").exit_code == 2);
    CHECK(run("sideways").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("cli: negativity command") {
    const RunResult r = run("negativity --bloch 0.6,0.8,0");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(grab(r.output, "negativity_matrix") - 0.5) < 1e-12);
    CHECK(std::abs(grab(r.output, "negativity_closed_form") - 0.5) < 1e-12);
    CHECK(std::abs(grab(r.output, "difference")) < 1e-12);

    const RunResult zero = run("negativity --bloch 0,0,0");
    CHECK(zero.exit_code == 0);
    CHECK(grab(zero.output, "negativity_matrix") == 0.0);

    const RunResult zpole = run("negativity --bloch 0,0,0.9");
    CHECK(grab(zpole.output, "negativity_matrix") == 0.0);
}

TEST_CASE("cli: verify-relation writes CSV and JSON, reruns byte-identical") {
    const std::string csv1 = tmp_dir + "/rel1.csv", json1 = tmp_dir + "/rel1.json";
    const std::string csv2 = tmp_dir + "/rel2.csv", json2 = tmp_dir + "/rel2.json";
    const std::string flags = "verify-relation --shells 0.5 --dirs 64 --axis z";

    const RunResult r1 = run(flags + " --out " + csv1 + " --summary " + json1);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("direction_independent=yes") != std::string::npos);

    const RunResult r2 = run(flags + " --out " + csv2 + " --summary " + json2);
    CHECK(r2.exit_code == 0);

    const std::string csv = slurp(csv1);
    CHECK(csv == slurp(csv2));
    const std::string json = slurp(json1);
    CHECK(json == slurp(json2));

    // header and row count
    CHECK(csv.rfind("shell,nx,ny,nz,axis,negativity,metric,sqrt_metric,mixedness,ratio\n", 0) ==
          0);
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    CHECK(lines == 65);  // header + 64 samples

    // summary schema contract
    CHECK(json.find("\"paper_coefficient\"") != std::string::npos);
    CHECK(json.find("\"measured_coefficient\"") != std::string::npos);
    CHECK(json.find("\"derived_coefficient\"") != std::string::npos);
    CHECK(json.find("\"direction_independent\": true") != std::string::npos);
}

TEST_CASE("cli: verify-relation rejects bad radii with exit 1") {
    CHECK(run("verify-relation --shells 1.5 --dirs 64").exit_code == 1);
    CHECK(run("verify-relation --shells 0.5 --dirs 4").exit_code == 1);
}

TEST_CASE("cli: monotonicity prints per-family lines and exits 0") {
    const std::string csv1 = tmp_dir + "/mono1.csv", csv2 = tmp_dir + "/mono2.csv";
    const std::string flags = "monotonicity --samples 15 --seed 3";

    const RunResult r1 = run(flags + " --out " + csv1);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("family=identity") != std::string::npos);
    CHECK(r1.output.find("family=unitary") != std::string::npos);
    CHECK(r1.output.find("=> ok") != std::string::npos);

    const RunResult r2 = run(flags + " --out " + csv2);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(r1.output == r2.output);

    const RunResult sub = run("monotonicity --samples 10 --seed 1 --channels unitary");
    CHECK(sub.exit_code == 0);
    CHECK(sub.output.find("family=unitary") != std::string::npos);
    CHECK(sub.output.find("family=identity") == std::string::npos);

    CHECK(run("monotonicity --samples 10 --channels teleport").exit_code == 1);
}
