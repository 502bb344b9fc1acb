#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cdeg/corpus.hpp"

using cdeg::SuiteOptions;
using i64 = std::int64_t;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name)
        : path(fs::temp_directory_path() / ("cdeg-test-" + name)) {
        std::error_code ec;
        fs::remove(path, ec);
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

}  // namespace

TEST_CASE("suite at genus 2: hand-checkable corpus, zero failures") {
    SuiteOptions opt;
    opt.max_genus = 2;
    auto rep = cdeg::run_suite(opt);
    CHECK(rep.semigroup_count == 4);
    CHECK(rep.totals.fail == 0);
    CHECK(rep.failures.empty());
    // the DVR is skipped by the idealization checks, never passed vacuously
    CHECK(rep.per_property.at("thm6.8").skipped == 1);
    CHECK(rep.per_property.at("thm6.8").pass == 3);
    // type-2 preconditions show up as skips
    CHECK(rep.per_property.at("thm4.6").pass + rep.per_property.at("thm4.6").skipped == 4);
}

TEST_CASE("suite at genus 8 on cor2.5: 156 rings") {
    SuiteOptions opt;
    opt.max_genus = 8;
    opt.properties = {"cor2.5"};
    auto rep = cdeg::run_suite(opt);
    CHECK(rep.semigroup_count == 156);
    CHECK(rep.totals.fail == 0);
    CHECK(rep.per_property.at("cor2.5").pass == 156);
}

TEST_CASE("unknown property id") {
    SuiteOptions opt;
    opt.properties = {"cor2.5", "bogus"};
    CHECK_THROWS_AS(cdeg::run_suite(opt), cdeg::unknown_property);
}

TEST_CASE("suite output is byte-identical for 1 and 4 workers") {
    SuiteOptions a;
    a.max_genus = 6;
    a.workers = 1;
    SuiteOptions b = a;
    b.workers = 4;
    const std::string ja = cdeg::verification_to_json(cdeg::run_suite(a)).dump();
    const std::string jb = cdeg::verification_to_json(cdeg::run_suite(b)).dump();
    CHECK(ja == jb);
}

TEST_CASE("cache round-trip is byte-identical") {
    TempFile tmp("cache.jsonl");
    std::vector<cdeg::InvariantReport> reports;
    cdeg::enumerate_by_genus(5, [&](const cdeg::NumericalSemigroup& S) {
        reports.push_back(cdeg::analyze(S));
    });
    cdeg::cache_store(tmp.path.string(), reports);
    const std::string first = slurp(tmp.path);
    auto loaded = cdeg::cache_load(tmp.path.string());
    CHECK(loaded.size() == reports.size());
    cdeg::cache_store(tmp.path.string(), loaded);
    CHECK(slurp(tmp.path) == first);
}

TEST_CASE("cache format validation") {
    TempFile tmp("cache-bad.jsonl");
    {
        std::ofstream out(tmp.path);
        out << R"({"format":"cdeg-cache","version":2})" << "\n";
    }
    CHECK_THROWS_AS(cdeg::cache_load(tmp.path.string()), cdeg::format_version_mismatch);

    {
        std::ofstream out(tmp.path);
        out << R"({"format":"cdeg-cache","version":1})" << "\n";
        out << "this is not json\n";
    }
    try {
        cdeg::cache_load(tmp.path.string());
        FAIL("expected corrupt_record");
    } catch (const cdeg::corrupt_record& e) {
        CHECK(e.line_number == 2);
    }

    CHECK_THROWS_AS(cdeg::cache_load("/nonexistent/dir/cache.jsonl"), cdeg::io_error);
}

TEST_CASE("warm cache reruns produce identical reports") {
    TempFile tmp("cache-warm.jsonl");
    SuiteOptions opt;
    opt.max_genus = 6;
    opt.cache_path = tmp.path.string();
    auto cold = cdeg::run_suite(opt);
    const std::string cold_cache = slurp(tmp.path);
    auto warm = cdeg::run_suite(opt);
    CHECK(cdeg::verification_to_json(cold).dump() == cdeg::verification_to_json(warm).dump());
    CHECK(slurp(tmp.path) == cold_cache);
    WARN("cold " << cold.wall_ms << " ms, warm " << warm.wall_ms << " ms");
}

TEST_CASE("experiment table is present when selected") {
    SuiteOptions opt;
    opt.max_genus = 3;
    opt.properties = {"question6.10"};
    auto rep = cdeg::run_suite(opt);
    CHECK(rep.experiment.size() == 7);  // 8 semigroups minus the DVR
    auto j = cdeg::verification_to_json(rep);
    REQUIRE(j.contains("experiment"));
    CHECK(j["experiment"].size() == 7);
}
