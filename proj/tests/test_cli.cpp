#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// CDEG_CLI_PATH is injected by the build
#ifndef CDEG_CLI_PATH
#error "CDEG_CLI_PATH not defined"
#endif

namespace {

struct CliResult {
    std::string out;
    int exit_code = -1;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string cmd = std::string(CDEG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json result_of(const CliResult& r) {
    auto env = nlohmann::json::parse(r.out);
    REQUIRE(env["schema_version"] == 1);
    return env["result"];
}

}  // namespace

TEST_CASE("cli invariants --json") {
    auto r = run_cli("invariants 4 7 13 14 --json");
    REQUIRE(r.exit_code == 0);
    auto res = result_of(r);
    CHECK(res["cdeg"] == 3);
    CHECK(res["canonical_index"] == 3);
    CHECK(res["type"] == 2);
    CHECK(res["almost_gorenstein"] == false);

    auto r2 = run_cli("invariants 2 3 --json");
    REQUIRE(r2.exit_code == 0);
    auto res2 = result_of(r2);
    CHECK(res2["gorenstein"] == true);
    CHECK(res2["cdeg"] == 0);

    auto r3 = run_cli("invariants 4 7 9 10 --json");
    auto res3 = result_of(r3);
    CHECK(res3["cdeg"] == 3);
    CHECK(res3["type"] == 3);
    CHECK(res3["canonical_index"] == 2);
}

TEST_CASE("cli rejects invalid generators with exit 2") {
    CHECK(run_cli("invariants 4 6").exit_code == 2);
    CHECK(run_cli("invariants 0 3").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli roots") {
    auto r = run_cli("roots 4 5 6 7 --json");
    REQUIRE(r.exit_code == 0);
    auto res = result_of(r);
    CHECK(res["rootset"] == nlohmann::json::array({1, 2}));

    auto r2 = run_cli("roots 7 8 9 12 --json");
    CHECK(result_of(r2)["rootset"] == nlohmann::json::array({1}));
}

TEST_CASE("cli family") {
    auto r = run_cli("family e-family --from 4 --to 6 --json");
    REQUIRE(r.exit_code == 0);
    auto res = result_of(r);
    CHECK(res["all_match"] == true);
    CHECK(res["rows"].size() == 3);

    CHECK(run_cli("family e-family --from 3 --to 3").exit_code == 2);  // e >= 4
    CHECK(run_cli("family no-such-family").exit_code == 2);
}

TEST_CASE("cli verify") {
    auto r = run_cli("verify --max-genus 3 --json");
    REQUIRE(r.exit_code == 0);
    auto res = result_of(r);
    CHECK(res["semigroup_count"] == 8);
    CHECK(res["totals"]["fail"] == 0);

    CHECK(run_cli("verify --max-genus 3 --properties bogus").exit_code == 2);
}

TEST_CASE("cli respects CDEG_GENUS_CAP") {
    auto r = run_cli("verify --max-genus 6 --json");
    CHECK(r.exit_code == 0);
    CliResult capped;
    {
        const std::string cmd = std::string("CDEG_GENUS_CAP=4 ") + CDEG_CLI_PATH +
                                " verify --max-genus 6 --json 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            capped.out.append(buf.data(), n);
        const int status = pclose(pipe);
        capped.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    CHECK(capped.exit_code == 2);
}

TEST_CASE("cli idealize") {
    auto r = run_cli("idealize 3 4 5 --json");
    REQUIRE(r.exit_code == 0);
    auto res = result_of(r);
    CHECK(res["cdeg_A"] == 4);
    CHECK(res["r_A"] == 5);
    CHECK(res["rho_R"] == 2);
    CHECK(res["rho_A"] == 2);
    CHECK(res["ag_transfer"] == "pass");
}

TEST_CASE("cli table output derives from the same payload") {
    auto r = run_cli("invariants 3 4 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("cdeg: 1") != std::string::npos);
    CHECK(r.out.find("canonical_index: 2") != std::string::npos);
}

TEST_CASE("cli config file merges under flags") {
    const auto cfg = std::filesystem::temp_directory_path() / "cdeg-test-config.json";
    {
        std::ofstream out(cfg);
        out << R"({"genus_cap": 4, "workers": 2})";
    }
    // config genus_cap applies: max-genus 6 now exceeds the cap
    auto r = run_cli("verify --max-genus 6 --config " + cfg.string());
    CHECK(r.exit_code == 2);
    // within the cap it runs fine with the config's worker count
    auto r2 = run_cli("verify --max-genus 4 --config " + cfg.string() + " --json");
    CHECK(r2.exit_code == 0);
    std::filesystem::remove(cfg);
}

TEST_CASE("cli i/o failures exit 3") {
    auto r = run_cli("verify --max-genus 2 --cache /nonexistent-dir/cache.jsonl");
    CHECK(r.exit_code == 3);
    auto r2 = run_cli("verify --max-genus 2 --config /nonexistent-dir/config.json");
    CHECK(r2.exit_code == 3);
}
