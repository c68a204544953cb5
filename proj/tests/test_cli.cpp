// end-to-end checks of the installed command-line interface
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#ifndef GF2TRACE_CLI_PATH
#error "GF2TRACE_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GF2TRACE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("solve: solvable, unsolvable, and usage exit codes") {
    auto sample = run_cli("sample --n 4 --k 2 --seed 5");
    REQUIRE(sample.exit_code == 0);
    std::string a = sample.output.substr(0, sample.output.find('\n'));

    auto ok = run_cli("solve --n 4 --k 2 --l 1 --a " + a);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("solvable") != std::string::npos);
    CHECK(ok.output.find("kernel basis") != std::string::npos);

    // absolute trace on GF(2^4) misses everything outside GF(2)
    auto bad = run_cli("solve --n 4 --k 4 --l 1 --a 0xe0");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("unsolvable") != std::string::npos);

    CHECK(run_cli("solve --n 4 --k 2").exit_code == 2);            // missing flags
    CHECK(run_cli("solve --n 0 --k 2 --l 1 --a 0x1").exit_code == 2);
    CHECK(run_cli("solve --n 4 --k 2 --l 1 --a 0xqq").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("solve --json round-trips and matches the text output") {
    auto res = run_cli("solve --n 4 --k 4 --l 1 --a 0x1 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["solvable"] == true);
    CHECK(j["count"] == 8);  // kernel of the absolute trace has dimension 3
    CHECK(j["equation"]["n"] == 4);
    CHECK(j["kernel_basis"].size() == 3);
    CHECK(j["ambient"]["modulus"] == "0x11b");
}

TEST_CASE("kernel and classify") {
    auto j = nlohmann::json::parse(run_cli("kernel --n 6 --k 4 --l 2 --json").output);
    CHECK(j["dimension"] == 2);

    auto perm = run_cli("classify --n 2 --k 3 --l 1");
    CHECK(perm.exit_code == 0);
    CHECK(perm.output.find("permutation") != std::string::npos);
    auto other = nlohmann::json::parse(run_cli("classify --n 2 --k 4 --l 1 --json").output);
    CHECK(other["tag"] != "permutation");
}

TEST_CASE("custom modulus is honoured and validated") {
    // X^8+X^5+X^3+X+1 is irreducible; 0x11d is the default's neighbour
    auto res = run_cli("solve --n 4 --k 2 --l 1 --a 0x1 --modulus 0x12b --json");
    if (res.exit_code == 0) {
        auto j = nlohmann::json::parse(res.output);
        CHECK(j["ambient"]["modulus"] == "0x12b");
    } else {
        CHECK(res.exit_code == 2);  // 0x1 must still be in GF(2^4): it always is
        FAIL("solve with custom modulus failed: ", res.output);
    }
    CHECK(run_cli("solve --n 4 --k 2 --l 1 --a 0x1 --modulus 0x100").exit_code == 2);  // reducible
    CHECK(run_cli("solve --n 4 --k 2 --l 1 --a 0x1 --modulus 0x7").exit_code == 2);    // wrong degree
}

TEST_CASE("verify exit codes and output") {
    auto res = run_cli("verify --max-n 3 --samples 25 --seed 2 --jobs 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("PASS") != std::string::npos);
    CHECK(res.output.find("FAIL") == std::string::npos);

    CHECK(run_cli("verify --max-n 0").exit_code == 2);

    auto j = nlohmann::json::parse(run_cli("verify --max-n 3 --samples 25 --json").output);
    CHECK(j["all_pass"] == true);
    CHECK(j["laws"].size() >= 20);
}

TEST_CASE("field-info and bench") {
    auto j = nlohmann::json::parse(run_cli("field-info --n 4 --json").output);
    CHECK(j["m"] == 8);
    CHECK(j["subfield_basis"].size() == 4);

    auto bench = run_cli("bench --grid \"4,2,1\" --iters 2 --out -");
    CHECK(bench.exit_code == 0);
    CHECK(bench.output.rfind("n,k,l,method,median_ns,iterations,amortized", 0) == 0);
    CHECK(run_cli("bench --grid \"4,8,1\" --iters 2").exit_code == 2);  // k > n rejected
}
