#include "gstirling/table_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + " " + std::string(GSTIRLING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const char* name) {
    return std::string("/tmp/gstirling_cli_test_") + name + "_" + std::to_string(getpid());
}

}  // namespace

TEST_CASE("eval prints exact cells") {
    CHECK(run_cli("eval -n -3 -k 2").out == "85/216\n");
    CHECK(run_cli("eval -n 0 -k 0").out == "1\n");
    CHECK(run_cli("eval -n 5 -k 2").out == "-50\n");
    CHECK(run_cli("eval -n -5 -k 1 --method knuth").out == "-137/7200\n");
    CHECK(run_cli("eval -n 4 -k 2 --method partition").out == "11\n");
    CHECK(run_cli("eval -n -2 -k 3 --method symfunc").out == "-15/16\n");
    CHECK(run_cli("eval -n -4 -k 2 --method defn").out == "415/3456\n");
}

TEST_CASE("eval routes real degrees through the float path") {
    const auto real = run_cli("eval -n 0.5 -k 0");
    CHECK(real.exit_code == 0);
    CHECK(real.out.substr(0, 11) == "0.564189583");

    // An integral float forces the exact path.
    CHECK(run_cli("eval -n 3.0 -k 1").out == "2\n");
}

TEST_CASE("eval error paths") {
    CHECK(run_cli("eval -n 2 -k 1 --method bogus").exit_code == 2);
    CHECK(run_cli("eval -n x7 -k 1").exit_code == 2);
    CHECK(run_cli("eval -n 2 -k 1 --method real").exit_code == 3);   // integer degree
    CHECK(run_cli("eval -n 0.5 -k 1 --method knuth").exit_code == 3);  // divergent extension
    CHECK(run_cli("eval -n 3 -k 1 --method knuth").exit_code == 3);  // positive degree
    CHECK(run_cli("eval -n 0 -k 0 --method knuth").exit_code == 3);  // undefined seed
    CHECK(run_cli("eval").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("table csv matches the delta column") {
    const auto res = run_cli("table --region 0:0:2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "0,0,1\n0,1,0\n0,2,0\n");
}

TEST_CASE("table native round trip through a file") {
    const std::string path = temp_path("native");
    const auto emitted = run_cli("table --region -3:3:4 --format native --created "
                                 "2026-08-11T00:00:00Z --out " +
                                 path);
    REQUIRE(emitted.exit_code == 0);

    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const gstirling::TableFile parsed = gstirling::parse_native(text);
    CHECK(gstirling::print_native(parsed) == text);
    CHECK(parsed.created == "2026-08-11T00:00:00Z");
    CHECK(parsed.table.cell(-3, 2) == gstirling::parse_rational("85/216"));
    std::remove(path.c_str());
}

TEST_CASE("table emits regions that skip degree zero") {
    const auto res = run_cli("table --region 2:3:2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "2,0,0\n2,1,-1\n2,2,1\n3,0,0\n3,1,2\n3,2,-3\n");
}

TEST_CASE("table latex keeps the sign outside the fraction") {
    const auto res = run_cli("table --region -2:-2:1 --format latex");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("-\\frac{3}{4}") != std::string::npos);
}

TEST_CASE("table region limits") {
    CHECK(run_cli("table --region -501:0:3").exit_code == 2);
    CHECK(run_cli("table --region 0:0:1001").exit_code == 2);
    CHECK(run_cli("table --region -5:5:6", "GSTIRLING_MAX_REGION=10").exit_code == 2);
    CHECK(run_cli("table --region -5:5:6 --format csv", "GSTIRLING_MAX_REGION=100")
              .exit_code == 0);
    CHECK(run_cli("table --region 1:0:3").exit_code == 2);
}

TEST_CASE("verify exits zero on a clean region, one on a fault") {
    const auto clean = run_cli("verify --region -3:3:4 --n-max 8");
    CHECK(clean.exit_code == 0);
    CHECK(clean.out.find("FAIL") == std::string::npos);

    const auto faulty = run_cli("verify --region -3:3:4 --n-max 8 --inject-fault");
    CHECK(faulty.exit_code == 1);
    CHECK(faulty.out.find("FAIL") != std::string::npos);
    CHECK(faulty.out.find("counterexample") != std::string::npos);

    const auto harmonic_only = run_cli("verify --region -3:3:4 --only harmonic --n-max 10");
    CHECK(harmonic_only.exit_code == 0);
}

TEST_CASE("verify emits machine-readable reports") {
    const auto res = run_cli("verify --region -2:2:3 --n-max 6 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"all_passed\": true") != std::string::npos);
    CHECK(res.out.find("\"five-way-agreement\"") != std::string::npos);
}

TEST_CASE("bench writes per-cell records") {
    const auto res =
        run_cli("bench --region -3:0:3 --reps 2 --algorithms knuth,partition --out /dev/null");
    CHECK(res.exit_code == 0);

    const auto csv = run_cli("bench --region -2:0:2 --reps 1 --algorithms recurrence");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.substr(0, 28) == "algorithm,n,k,seconds,cells\n");
    int lines = 0;
    for (char c : csv.out)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + 3 * 3);  // header + one record per cell

    const auto parallel =
        run_cli("bench --region -2:0:2 --reps 1 --parallel --algorithms knuth,partition");
    CHECK(parallel.exit_code == 0);
}
