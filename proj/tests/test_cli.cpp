#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(WPRM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("points command") {
    auto r = run_cli("points --q 3 --w 2,3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 4);

    auto s = run_cli("points --q 3 --w 3,1,1 --layout structured");
    CHECK(s.exit_code == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["count"] == 13);
    CHECK(js["set"]["blocks"].size() == 4);

    // precondition failure: gcd(w_0, q-1) != 1
    CHECK(run_cli("points --q 3 --w 2,3 --layout structured").exit_code == 2);
}

TEST_CASE("params command") {
    auto r = run_cli("params --q 3 --w 3,1,1 --d 3");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["n"] == 13);
    CHECK(j["results"][0]["k"] == 5);
    CHECK(j["results"][0]["hierarchy"] ==
          nlohmann::json::array({3, 6, 9, 12, 13}));

    // degree ranges
    auto rr = run_cli("params --q 3 --w 1,1 --d 1..3");
    CHECK(rr.exit_code == 0);
    CHECK(nlohmann::json::parse(rr.out)["results"].size() == 3);
}

TEST_CASE("determinism: identical invocations produce identical bytes") {
    auto a = run_cli("params --q 3 --w 2,3 --d 6");
    auto b = run_cli("params --q 3 --w 2,3 --d 6");
    CHECK(a.out == b.out);
}

TEST_CASE("verify command exit codes") {
    CHECK(run_cli("verify recursive --q 3 --w 3,1,1 --d 3").exit_code == 0);
    CHECK(run_cli("verify wprs --q 5 --w 2,3 --d 5").exit_code == 0);
    CHECK(run_cli("verify schur --q 4 --w 1,1,2 --d1 1 --d2 1").exit_code == 0);
    // precondition violations are exit 2
    CHECK(run_cli("verify recursive --q 31 --w 2,3,5 --d 30").exit_code == 2);
    // budget exhaustion is exit 3
    CHECK(run_cli("params --q 4 --w 1,1,1,1 --d 3 --ghw-budget 5").exit_code == 3);
}

TEST_CASE("verify dual-monomial reports the residual") {
    auto r = run_cli("verify dual-monomial --q 5 --w 2,5,7 --d 8 --dstar 280");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["report"]["complete"] == false);
    CHECK(j["results"][0]["report"]["residual_dim"] == 1);
}

TEST_CASE("table command reproduces the reference rows") {
    std::string spec_path = "/tmp/wprm_table_spec.json";
    {
        std::ofstream f(spec_path);
        f << R"json({"rows": [
            {"kind": "wrm_congruence", "label": "WRM_3(3;(1,1))", "q": 3, "w0": 3, "w": [1,1], "d": 3},
            {"kind": "wrm_congruence", "label": "WRM_0(3;(1,1))", "q": 3, "w0": 3, "w": [1,1], "d": 0},
            {"kind": "wprm", "label": "PRS_3", "q": 3, "w": [1,1], "d": 3}
        ]})json";
    }
    auto r = run_cli("table --spec " + spec_path);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["n"] == 9);
    CHECK(j["rows"][0]["k"] == 5);
    CHECK(j["rows"][0]["hierarchy"] == nlohmann::json::array({2, 4, 6, 8, 9}));
    CHECK(j["rows"][1]["k"] == 1);
    CHECK(j["rows"][2]["n"] == 4);
    CHECK(j["rows"][2]["hierarchy"] == nlohmann::json::array({1, 2, 3, 4}));

    auto csv = run_cli("table --spec " + spec_path + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("WRM_3(3;(1,1)),9,5") != std::string::npos);

    // empty spec: empty artifact, success
    std::string empty_path = "/tmp/wprm_table_empty.json";
    {
        std::ofstream f(empty_path);
        f << R"json({"rows": []})json";
    }
    CHECK(run_cli("table --spec " + empty_path).exit_code == 0);
}
