#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "cdeg/invariants.hpp"
#include "cdeg/relideal.hpp"
#include "cdeg/roots.hpp"
#include "cdeg/semigroup.hpp"

using cdeg::NumericalSemigroup;
using cdeg::RelativeIdeal;
using i64 = std::int64_t;

namespace {

i64 count_ideals(const NumericalSemigroup& S) {
    i64 n = 0;
    cdeg::enumerate_normalized_ideals(S, [&](const RelativeIdeal&) { ++n; });
    return n;
}

}  // namespace

TEST_CASE("normalized ideal enumeration counts") {
    CHECK(count_ideals(NumericalSemigroup::make({2, 3})) == 2);
    CHECK(count_ideals(NumericalSemigroup::make({3, 4, 5})) == 4);
    CHECK(count_ideals(NumericalSemigroup::make({4, 5, 6, 7})) == 8);
    CHECK(count_ideals(NumericalSemigroup::make({4, 7, 9, 10})) == 18);
    CHECK(count_ideals(NumericalSemigroup::make({4, 7, 13, 14})) == 26);
}

TEST_CASE("enumerated ideals are valid, normalized and distinct") {
    auto S = NumericalSemigroup::make({4, 7, 9, 10});
    std::set<std::string> seen;
    cdeg::enumerate_normalized_ideals(S, [&](const RelativeIdeal& E) {
        CHECK(E.offset() == 0);
        CHECK(seen.insert(E.window().to_string01()).second);
        // closed under adding generators
        E.window().for_each_set([&](int i) {
            for (i64 g : S.generators()) CHECK(E.contains(i + g));
        });
    });
    CHECK(seen.size() == 18);
}

TEST_CASE("enumeration respects the genus cap") {
    // maxgen semigroup <18, ..., 35> has genus 17 and type 17
    std::vector<i64> gens;
    for (i64 i = 18; i <= 35; ++i) gens.push_back(i);
    auto S = NumericalSemigroup::make(gens);
    REQUIRE(S.genus() == 17);
    CHECK_THROWS_AS(cdeg::rootset(S), cdeg::genus_cap_exceeded);
    CHECK_NOTHROW(cdeg::rootset(S, S.genus()));
}

TEST_CASE("rootset of <4,5,6,7> is {1,2} with the square-root witness") {
    auto S = NumericalSemigroup::make({4, 5, 6, 7});
    auto rs = cdeg::rootset(S);
    CHECK(rs.taus == std::set<i64>{1, 2});
    bool found = false;
    for (const auto& w : rs.witnesses)
        if (w.tau == 2) {
            found = true;
            CHECK(cdeg::minimal_generators(w.ideal) == std::vector<i64>{0, 1});
            CHECK(w.reduction == 3);
            CHECK(w.closed);
        }
    CHECK(found);
}

TEST_CASE("rootset Gorenstein and type-3 examples") {
    CHECK(cdeg::rootset(NumericalSemigroup::make({2, 3})).taus == std::set<i64>{1});
    CHECK(cdeg::rootset(NumericalSemigroup::make({3, 4, 5})).taus == std::set<i64>{1});
    CHECK(cdeg::rootset(NumericalSemigroup::make({7, 8, 9, 12})).taus == std::set<i64>{1});
    CHECK(cdeg::rootset(NumericalSemigroup::make({4, 7, 9, 10})).taus == std::set<i64>{1});
}

TEST_CASE("maxgen family attains tau = a - 2 = r - 1") {
    const std::vector<std::set<i64>> expected_rootsets{
        {1}, {1, 2}, {1, 3}, {1, 2, 4}};  // a = 3, 4, 5, 6
    for (i64 a = 3; a <= 6; ++a) {
        std::vector<i64> gens;
        for (i64 i = a; i <= 2 * a - 1; ++i) gens.push_back(i);
        auto S = NumericalSemigroup::make(gens);
        auto rs = cdeg::rootset(S);
        CHECK(rs.taus == expected_rootsets[static_cast<std::size_t>(a - 3)]);
        CHECK(rs.taus.count(a - 2) == 1);
        CHECK(S.type() == a - 1);
    }
}

TEST_CASE("witness powers hit K exactly once") {
    auto S = NumericalSemigroup::make({4, 5, 6, 7});
    auto K = cdeg::canonical_ideal(S);
    for (const auto& w : cdeg::rootset(S).witnesses) {
        CHECK(cdeg::power(w.ideal, w.tau).window() == K.window());
        for (i64 n = 1; n < w.tau; ++n)
            CHECK(cdeg::power(w.ideal, n).window() != K.window());
    }
}

TEST_CASE("verify_root_theorems") {
    CHECK(cdeg::verify_root_theorems(NumericalSemigroup::make({4, 5, 6, 7})).passed());
    CHECK(cdeg::verify_root_theorems(NumericalSemigroup::make({2, 3})).passed());
}

TEST_CASE("root theorems hold over the genus <= 8 corpus") {
    cdeg::enumerate_by_genus(8, [&](const NumericalSemigroup& S) {
        CHECK(cdeg::verify_root_theorems(S).status != cdeg::PropertyCheckResult::Status::fail);
        CHECK(cdeg::check_root_index_bound(S).status != cdeg::PropertyCheckResult::Status::fail);
    });
}

TEST_CASE("root index bound detail over <4,5,6,7>") {
    auto S = NumericalSemigroup::make({4, 5, 6, 7});
    auto L = RelativeIdeal::from_generators(S, {0, 1});
    CHECK(cdeg::reduction_number(L) == 3);
    // tau = 2, p = 2: rho <= floor((red(L) + 1)/2) = 2
    CHECK(cdeg::canonical_index(S) == 2);
    CHECK(cdeg::check_root_index_bound(S).passed());
}

TEST_CASE("type-3 rootless family") {
    auto res = cdeg::check_no_proper_roots_type3(2, 3, 7);
    REQUIRE(res.passed());
    CHECK(res.generators == std::vector<i64>{7, 8, 9, 12});
    CHECK(res.payload["canonical_generators"] == std::vector<i64>{0, 2, 3});
    CHECK(res.payload["type"] == 3);

    CHECK(cdeg::check_no_proper_roots_type3(2, 3, 8).passed());
    CHECK(cdeg::check_no_proper_roots_type3(3, 4, 9).passed());

    CHECK_THROWS_AS(cdeg::check_no_proper_roots_type3(3, 6, 12), cdeg::hypothesis_violated);
    CHECK_THROWS_AS(cdeg::check_no_proper_roots_type3(2, 3, 6), cdeg::hypothesis_violated);
    CHECK_THROWS_AS(cdeg::check_no_proper_roots_type3(3, 2, 9), cdeg::hypothesis_violated);
}
