#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DCG_CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("eval spinor round trip and errors") {
    RunResult r = run_cli("eval spinor \"1 + e1237 + e4567 + e123456\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1+e1237+e4567+e123456\n");

    r = run_cli("eval spinor \"e17 + f3\"");
    CHECK(r.exit_code == 2);

    r = run_cli("--json eval spinor \"e12\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"parity\": \"even\"") != std::string::npos);

    r = run_cli("eval spinor \"e7-f7\" --as vector");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "e7-f7\n");

    r = run_cli("eval spinor \"e7-f7\" --as matrix");
    CHECK(r.exit_code == 2);
}

TEST_CASE("eval chow") {
    RunResult r = run_cli("eval chow \"2*t1*t3^2 + 2*t1^2*t5 - 6*t1^4*t3 + 3*t1^7\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tau[4,2,1]+tau[4,3]+tau[5,2]+tau[6,1]") != std::string::npos);

    r = run_cli("eval chow \"tau[7]\"");
    CHECK(r.exit_code == 2);
}

TEST_CASE("annihilator, member, orbit-type") {
    RunResult r = run_cli("annihilator \"e1237+e4567\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("annihilator dimension 1") != std::string::npos);
    CHECK(r.output.find("pure: false") != std::string::npos);

    r = run_cli("member \"e14\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("member: true") != std::string::npos);

    r = run_cli("orbit-type \"e14\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(3,3)") != std::string::npos);

    r = run_cli("orbit-type \"1 + e1237 + e4567 + e123456\"");
    CHECK(r.exit_code == 1); // not a point of the section

    r = run_cli("annihilator \"e1\""); // odd parity: dimension reported, no purity
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("annihilator dimension 7") != std::string::npos);
    CHECK(r.output.find("pure: false") != std::string::npos);

    r = run_cli("member \"1 + e1\""); // mixed parity where parity is required
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify exit codes and determinism") {
    RunResult r = run_cli("verify degree");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS degree") != std::string::npos);

    r = run_cli("verify no-such-suite");
    CHECK(r.exit_code == 2);

    const RunResult a = run_cli("--json verify clifford-table --seed 7");
    const RunResult b = run_cli("--json verify clifford-table --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"suite\": \"clifford-table\"") != std::string::npos);

    // the flag is accepted after the subcommand as well
    const RunResult c = run_cli("verify clifford-table --seed 7 --json");
    CHECK(c.output == a.output);
}

TEST_CASE("verify fixed-points") {
    const RunResult r = run_cli("verify fixed-points --quiet");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS fixed-points") != std::string::npos);
}
