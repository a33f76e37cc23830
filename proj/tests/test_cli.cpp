#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LYNESS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("iterate emits the orbit") {
    auto r = run_cli("iterate --a 7 --x0 3/2 --x1 5/7 --steps 9");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "ok");
    REQUIRE(j["orbit"].size() == 10);
    CHECK(j["orbit"][0]["x"] == "3/2");
    CHECK(j["orbit"][2]["x"] == "36/7");
    CHECK(j["orbit"][9] == j["orbit"][0]);
}

TEST_CASE("period reports the exact period") {
    auto r = run_cli("period --a 7 --x0 3/2 --x1 5/7");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "periodic");
    CHECK(j["period"] == 9);
    CHECK(j["orbit"].size() == 9);

    auto f = run_cli("period --a 2 --x0 0 --x1 1");
    CHECK(f.exit_code == 0);
    CHECK(json::parse(f.out)["status"] == "forbidden-set");
}

TEST_CASE("curve subcommands") {
    auto c = run_cli("curve classify --a 7 --h 258/7");
    CHECK(json::parse(c.out)["class"] == "elliptic");

    auto m = run_cli("curve mul --a 7 --h 258/7 --p 1:0:0 --k 3");
    CHECK(json::parse(m.out)["result"] == "0:7:-1");  // canonical form of [0:-7:1]

    auto o = run_cli("curve order --a 7 --h 258/7");
    CHECK(json::parse(o.out)["order"] == 9);

    auto add = run_cli("curve add --a 7 --h 258/7 --p 21:10:14 --q 1:0:0");
    CHECK(json::parse(add.out)["result"] == "5:36:7");
}

TEST_CASE("convert to tate and weierstrass") {
    auto t = run_cli("convert --to tate --a 7 --h 258/7 --point 1:0:0");
    json jt = json::parse(t.out);
    CHECK(jt["b"] == "-301/7776");
    CHECK(jt["c"] == "-7/216");
    CHECK(jt["point"] == "0:0:1");

    auto w = run_cli("convert --to weierstrass --a 7 --h 258/7 --point 1:-1:0");
    json jw = json::parse(w.out);
    CHECK(jw["point"] == "infinity");
}

TEST_CASE("family, torsion, mobius, nine") {
    auto f = run_cli("family --period 7 --u 3");
    json jf = json::parse(f.out);
    CHECK(jf["a"] == "8/5");
    CHECK(jf["period"] == 7);

    auto t = run_cli("torsion --a 7");
    CHECK(json::parse(t.out)["points"].size() == 9);

    auto m = run_cli("mobius --matrix -1,-1/2,1,0");
    json jm = json::parse(m.out);
    CHECK(jm["class"] == "globally-periodic");
    CHECK(jm["period"] == 4);

    auto n = run_cli("nine --kmin 1 --kmax 1");
    json jn = json::parse(n.out);
    REQUIRE(jn["seeds"].size() == 1);
    CHECK(jn["seeds"][0]["a"] == "391/370");
    CHECK(jn["seeds"][0]["positive"] == false);
}

TEST_CASE("verify exit codes and suite selection") {
    auto v = run_cli("verify --suite table1");
    CHECK(v.exit_code == 0);
    json jv = json::parse(v.out);
    CHECK(jv["pass"] == true);
    CHECK(jv["suites"].size() == 1);

    auto bad = run_cli("verify --suite nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("period --a 7").exit_code == 2);
    CHECK(run_cli("period --a 7 --x0 1/0 --x1 2").exit_code == 2);
}

TEST_CASE("text mode prints plain lines") {
    auto r = run_cli("--text period --a 7 --x0 3/2 --x1 5/7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("period: 9") != std::string::npos);
    CHECK(r.out.find("{") == std::string::npos);
}
