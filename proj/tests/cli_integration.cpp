// End-to-end checks of the installed CLI surface. The binary path arrives via
// the MAXCLASS_BIN environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* bin = std::getenv("MAXCLASS_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "MAXCLASS_BIN not set");
    return bin;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json strip_elapsed(const std::string& payload) {
    auto j = nlohmann::json::parse(payload);
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("theta: brute with --check exits 0 and reports the exact counts") {
    const auto r = run("theta --family D --n 2 --method brute --check --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "maxclass-units/1");
    CHECK(j["total"] == "48");
    CHECK(j["type1"] == "16");
    CHECK(j["type2"] == "32");
    CHECK(j["involutions"] == "47");
    CHECK(j["budget_exhausted"] == false);
}

TEST_CASE("theta: all four methods agree at n=3") {
    for (const char* method : {"formula", "brute", "structural", "proof"}) {
        const auto r = run(std::string("theta --family SD --n 3 --method ") + method +
                           " --check --format json");
        REQUIRE(r.exit_code == 0);
        CHECK(nlohmann::json::parse(r.out)["total"] == "1024");
    }
    const auto enumerated =
        run("theta --family SD --n 3 --method proof --order-source enumerated --format json");
    REQUIRE(enumerated.exit_code == 0);
    CHECK(nlohmann::json::parse(enumerated.out)["total"] == "1024");
}

TEST_CASE("theta: formula reaches the n=6 cap with exact big integers") {
    const auto r = run("theta --family SD --n 6 --method formula --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["total"] == "590295810358705651712");  // 2^69
}

TEST_CASE("census: csv header and documented orders") {
    const auto r = run("census --n 3 --sigma circledast --subgroup vuni --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("spec,n,order,empty,elapsed_ms\n", 0) == 0);
    CHECK(r.out.find("V_uni(circledast),3,16,false,") != std::string::npos);

    const auto empty_h = run("census --n 3 --subgroup h --i 1 --format json");
    REQUIRE(empty_h.exit_code == 0);
    const auto j = nlohmann::json::parse(empty_h.out);
    CHECK(j["empty"] == true);
    CHECK(j["order"] == "0");

    const auto mz = run("census --n 3 --subgroup m --sigma star --z 1+a^2 --format json");
    REQUIRE(mz.exit_code == 0);

    // spec names containing commas are CSV-quoted
    const auto quoted = run("census --n 4 --sigma circledast --subgroup h --i 2 --format csv");
    REQUIRE(quoted.exit_code == 0);
    CHECK(quoted.out.find("\"H(circledast,2)\",4,8192,false,") != std::string::npos);

    // n = 5 exceeds the enumeration cap but S_i has an affine-linear predicate
    const auto linear = run("census --n 5 --subgroup si --i 9 --format json");
    REQUIRE(linear.exit_code == 0);
    CHECK(nlohmann::json::parse(linear.out)["order"] == "512");
}

TEST_CASE("verify: pass lines and exit code") {
    const auto r = run("verify --suite lemma1 --n-range 2..4 --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("PASS lemma1.stabilizer_orders n=2") != std::string::npos);
    CHECK(r.out.find("PASS suite lemma1: 3/3 checks") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: JSON output is byte-stable for a fixed seed (elapsed aside)") {
    const std::string cmd = "verify --suite lemma4 --n-range 4..4 --samples 300 --seed 7 --format json";
    const auto a = run(cmd);
    const auto b = run(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}

TEST_CASE("exit codes: usage errors") {
    CHECK(run("theta --family D --n 2").exit_code == 2);               // missing --method
    CHECK(run("theta --family X --n 2 --method brute").exit_code == 2);
    CHECK(run("theta --family SD --n 2 --method formula").exit_code == 2);
    CHECK(run("census --n 2 --sigma circledast --subgroup vuni").exit_code == 2);
    CHECK(run("census --n 3 --subgroup m").exit_code == 2);            // m without --z
    CHECK(run("census --n 5 --subgroup h --i 0").exit_code == 2);      // beyond both paths
    CHECK(run("verify --suite lemma9").exit_code == 2);
    CHECK(run("verify --suite lemma8 --n-range 2..6").exit_code == 2); // out of cap
}

TEST_CASE("exit code 3: budget exhaustion") {
    const auto r = run("theta --family D --n 4 --method brute --budget 0.001 --format json");
    CHECK(r.exit_code == 3);
    CHECK(nlohmann::json::parse(r.out)["budget_exhausted"] == true);
}

TEST_CASE("config precedence: flags beat environment, environment beats defaults") {
    // environment budget alone trips the n=4 brute scan
    const auto env_only =
        run("theta --family D --n 4 --method brute --format json", "MAXCLASS_BUDGET=0.001 ");
    CHECK(env_only.exit_code == 3);

    // an explicit flag overrides the hostile environment value
    const auto flag_wins = run("theta --family D --n 3 --method brute --budget 600 --format json",
                               "MAXCLASS_BUDGET=0.000001 ");
    CHECK(flag_wins.exit_code == 0);
    CHECK(nlohmann::json::parse(flag_wins.out)["total"] == "1280");

    const auto env_workers =
        run("theta --family Q --n 3 --method brute --format json", "MAXCLASS_WORKERS=3 ");
    REQUIRE(env_workers.exit_code == 0);
    CHECK(nlohmann::json::parse(env_workers.out)["total"] == "768");
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "/tmp/maxclass_cli_out.json";
    std::remove(path.c_str());
    const auto r = run("theta --family Q --n 3 --method structural --format json --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf{};
    const std::size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    const auto j = nlohmann::json::parse(std::string(buf.data(), got));
    CHECK(j["total"] == "768");
    std::remove(path.c_str());
}

TEST_CASE("workers flag preserves counts") {
    const auto serial = run("theta --family Q --n 3 --method brute --workers 1 --format json");
    const auto parallel = run("theta --family Q --n 3 --method brute --workers 4 --format json");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(strip_elapsed(serial.out) == strip_elapsed(parallel.out));
}
