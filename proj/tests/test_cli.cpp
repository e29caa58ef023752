#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hmeans/mean.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HMEANS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

} // namespace

TEST_CASE("mean verb emits round-trippable json") {
    CliResult r = run_cli("mean --f power:-1 --m1 2 --m2 0 --a 1 --b 2 --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["verb"] == "mean");
    CHECK(doc["method"] == "root_solve");
    double in_process = hmeans::mean_power(-1.0, 2, 0, 1.0, 2.0).value;
    CHECK(doc["value"].get<double>() == in_process);  // 17 digits round-trip binary64
    CHECK(doc["value"].get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("identical argv gives byte-identical output") {
    const std::string args = "mean --f power:2.5 --m1 3 --m2 1 --a 0.7 --b 5.3 --format json";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CliResult csv1 = run_cli("sweep --m1 2 --m2 0 --a 1 --b 2 --p-grid -4,-2,1.5,6 --format csv");
    CliResult csv2 = run_cli("sweep --m1 2 --m2 0 --a 1 --b 2 --p-grid -4,-2,1.5,6 --format csv");
    CHECK(csv1.out == csv2.out);
}

TEST_CASE("degenerate interval short-circuits") {
    CliResult r = run_cli("mean --f power:2 --m1 1 --m2 0 --a 1 --b 1 --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["value"].get<double>() == 1.0);
    CHECK(doc["method"] == "theorem_shortcut");
}

TEST_CASE("exit codes distinguish usage from computation errors") {
    CHECK(run_cli("mean --f power:-1 --m1 2 --m2 0 --a 1 --b 2 --bogus-flag 1").status == 2);
    CHECK(run_cli("nonsense-verb").status == 2);
    CHECK(run_cli("mean --f power:-1 --m1 2 --m2 0 --a 1 --b 2 --format yaml").status == 2);
    // p = 2 with n = 3 makes the mean undefined: computation error
    CHECK(run_cli("mean --f logpower:9 --m1 2 --m2 0 --a 0.05 --b 1 --format json").status == 1);
    CHECK(run_cli("mean --f power:bad --m1 2 --m2 0 --a 1 --b 2").status == 1);
}

TEST_CASE("csv output has a header and LF endings") {
    CliResult r = run_cli("sweep --m1 1 --m2 0 --a 1 --b 2 --p-grid -1,1.5,4 --format csv");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("p,value\n", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);  // header + 3 rows
}

TEST_CASE("sweep reports monotonicity") {
    CliResult r = run_cli("sweep --m1 2 --m2 0 --a 1 --b 2 --p-grid -4,-2,1.5,6 --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["monotonicity"] == "strictly-increasing");
    CHECK(doc["values"].size() == 4);
}

TEST_CASE("identities verb summarises the battery") {
    CliResult text = run_cli("identities --max-m 4 --format text");
    CHECK(text.status == 0);
    CHECK(text.out.find("instances equal") != std::string::npos);
    CliResult json = run_cli("identities --max-m 4 --format json");
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["equal"] == true);
    CHECK(doc["failures"] == 0);
}

TEST_CASE("taylor-compare defaults to the nonrepresentability probe") {
    CliResult r = run_cli("taylor-compare --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["representable"] == false);
    CHECK(doc["p"] == "-7/10");
    CHECK(doc["r"] == "-1/2");
    CliResult tm = run_cli("taylor-compare --f power:-1 --r 1 --a 1 --b 2 --format json");
    auto tdoc = nlohmann::json::parse(tm.out);
    CHECK(tdoc["taylor_mean"].get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("--out writes the payload to a file") {
    std::string path = "/tmp/hmeans_cli_test_out.json";
    std::remove(path.c_str());
    CliResult r = run_cli("mean --f exp --m1 2 --m2 0 --a 1 --b 2 --format json --out " + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    nlohmann::json doc;
    file >> doc;
    CHECK(doc["f"] == "exp");
    std::remove(path.c_str());
}

TEST_CASE("verify verb runs a single suite") {
    CliResult r = run_cli("verify --suite harmonic --format json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["failures"] == 0);
    CHECK(doc["suites"][0]["name"] == "harmonic");
}
