#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(POLYREC_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("transform of the unit square") {
    auto res = run("transform -p " + fixture("square.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out == "1 + x1 + x2 + x1*x2\n");
}

TEST_CASE("recursion-verify exits zero on success") {
    auto res = run("recursion-verify -p " + fixture("triangle.json") + " --q " +
                   fixture("origin2.json") + " --kmax 4 --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["artifacts"]["certificate"]["k_range"] == Json::array({0, 4}));
}

TEST_CASE("minimality on the non-lattice translate") {
    auto res = run("minimality -p " + fixture("seg_r2.json") + " --q " +
                   fixture("halfpoint.json") + " --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["artifacts"]["certificate"]["minimal"] == false);
    for (const auto& [key, value] : j["artifacts"]["certificate"]["residuals"].items())
        CHECK(value.get<std::string>() == "0");
}

TEST_CASE("minimality on a lattice pair") {
    auto res = run("minimality -p " + fixture("seg_r2.json") + " --q " +
                   fixture("origin2.json") + " --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["artifacts"]["certificate"]["minimal"] == true);
}

TEST_CASE("indicator-check") {
    auto res = run("indicator-check -p " + fixture("square.json") + " --k 1 --box -1:3,-1:3");
    CHECK(res.exit_code == 0);
    auto res2 = run("indicator-check -p " + fixture("nonlattice_tri.json") + " --k 0");
    CHECK(res2.exit_code == 0);
}

TEST_CASE("ehrhart") {
    auto res = run("ehrhart -p " + fixture("square.json") + " --kmax 6 --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["artifacts"]["counts"] == Json::array({1, 4, 9, 16, 25, 36, 49}));
    CHECK(j["artifacts"]["min_vanishing_difference_order"] == 3);
}

TEST_CASE("brion") {
    auto res = run("brion -p " + fixture("pentagon.json") + " --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["artifacts"]["vertices"].size() == 5);
}

TEST_CASE("schur and kostka") {
    auto res = run("schur --shape " + fixture("shape_21.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.out == "x1^2*x2 + x1*x2^2\n");

    auto k = run("kostka --shape " + fixture("shape_paper.json") + " --weight 4,2,0");
    CHECK(k.exit_code == 0);
    CHECK(std::stoll(k.out) >= 1);
}

TEST_CASE("gt-vertices of the reference shape") {
    auto res = run("gt-vertices --shape " + fixture("shape_paper.json") + " --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["artifacts"]["nonintegral_vertices"].empty());
    for (const auto& v : j["artifacts"]["vertices"])
        for (const auto& c : v) {
            long long val = c.get<long long>();
            CHECK((val == 0 || val == 1 || val == 3 || val == 5));
        }
}

TEST_CASE("counterexample") {
    auto res = run("counterexample --shape " + fixture("shape_paper.json") + " --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["artifacts"]["refuted"] == true);
    bool has420 = false;
    for (const auto& w : j["artifacts"]["missing_from_vertex_weights"])
        if (w == Json::array({4, 2, 0})) has420 = true;
    CHECK(has420);
}

TEST_CASE("schur-recursion") {
    auto res = run("schur-recursion --shape " + fixture("shape_h.json") +
                   " --lmax 8 --lstart 0 --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["artifacts"]["order"] == 2);
}

TEST_CASE("repro-paper") {
    auto res = run("repro-paper --json");
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["verified"] == true);
    for (const auto& [name, check] : j["artifacts"]["checks"].items())
        CHECK(check["ok"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
    std::string args = "counterexample --shape " + fixture("shape_paper.json") + " --json";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/polyrec_cli_out.json";
    std::remove(path.c_str());
    auto res = run("transform -p " + fixture("square.json") + " --json --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf{};
    std::string content;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), got);
    fclose(f);
    Json j = Json::parse(content);
    CHECK(j["artifacts"]["transform"] == "1 + x1 + x2 + x1*x2");
    std::remove(path.c_str());
}

TEST_CASE("malformed input exits 2") {
    CHECK(run("transform -p /nonexistent.json").exit_code == 2);
    CHECK(run("kostka --shape " + fixture("shape_paper.json") + " --weight 1,bad").exit_code == 2);
    CHECK(run("kostka --shape " + fixture("shape_paper.json") + " --weight 1,2").exit_code == 2);
    // float coordinates are rejected outright
    CHECK(run("transform -p " + fixture("bad_float.json")).exit_code == 2);
}
