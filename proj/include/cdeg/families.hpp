#pragma once

/**
 * @file families.hpp
 * @brief Parametric semigroup families with closed-form invariant claims.
 *
 * Each row instantiates one family member, computes the claimed
 * quantities from scratch, and records MATCH/MISMATCH. The generator
 * lists encode the constructions exactly (index sets with exclusions
 * included); redundant generators are minimalized by make().
 */

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "invariants.hpp"
#include "relideal.hpp"
#include "roots.hpp"
#include "semigroup.hpp"

namespace cdeg {

struct FamilyRow {
    std::string family;
    nlohmann::ordered_json params;
    std::vector<std::int64_t> generators;
    nlohmann::ordered_json claimed;
    nlohmann::ordered_json computed;
    bool match = false;
};

/// H = <e, e+3, ..., 2e-1, 3e+1, 3e+2>: conductor 2e+3, K = <1, t>,
/// cdeg = 3, rho = e-1, type 2.
inline FamilyRow e_family_row(std::int64_t e) {
    if (e < 4) throw param_out_of_range("e-family needs e >= 4");
    std::vector<std::int64_t> gens{e};
    for (std::int64_t i = 3; i <= e - 1; ++i) gens.push_back(e + i);
    gens.push_back(3 * e + 1);
    gens.push_back(3 * e + 2);
    const NumericalSemigroup S = NumericalSemigroup::make(gens);
    FamilyRow row{"e-family", {{"e", e}}, S.generators(), {}, {}, false};
    row.claimed = {{"conductor", 2 * e + 3},
                   {"cdeg", 3},
                   {"rho", e - 1},
                   {"type", 2},
                   {"canonical_generators", {0, 1}}};
    row.computed = {{"conductor", S.conductor()},
                    {"cdeg", cdeg(S)},
                    {"rho", canonical_index(S)},
                    {"type", S.type()},
                    {"canonical_generators", minimal_generators(canonical_ideal(S))}};
    row.match = row.claimed == row.computed && cdeg(S) <= canonical_index(S);
    return row;
}

/// H = <a, a+3, ..., 2a-1, 2a+1, 2a+2>: cdeg = a-1 = nu(C), red(C) = 2.
inline FamilyRow a_family_1_row(std::int64_t a) {
    if (a < 4) throw param_out_of_range("a-family-1 needs a >= 4");
    std::vector<std::int64_t> gens{a};
    for (std::int64_t i = a + 3; i <= 2 * a - 1; ++i) gens.push_back(i);
    gens.push_back(2 * a + 1);
    gens.push_back(2 * a + 2);
    const NumericalSemigroup S = NumericalSemigroup::make(gens);
    FamilyRow row{"a-family-1", {{"a", a}}, S.generators(), {}, {}, false};
    std::vector<std::int64_t> kgens{0, 1};
    for (std::int64_t i = 3; i <= a - 1; ++i) kgens.push_back(i);
    row.claimed = {{"cdeg", a - 1},
                   {"nu_C", a - 1},
                   {"rho", 2},
                   {"canonical_generators", kgens}};
    row.computed = {{"cdeg", cdeg(S)},
                    {"nu_C", nu(canonical_ideal(S))},
                    {"rho", canonical_index(S)},
                    {"canonical_generators", minimal_generators(canonical_ideal(S))}};
    row.match = row.claimed == row.computed;
    return row;
}

/// H = <a, a+1, a+4, ..., 2a-1, 2a+2, 2a+3>: cdeg = a-2 = nu(C), red(C) = 3.
inline FamilyRow a_family_2_row(std::int64_t a) {
    if (a < 5) throw param_out_of_range("a-family-2 needs a >= 5");
    std::vector<std::int64_t> gens{a, a + 1};
    for (std::int64_t i = a + 4; i <= 2 * a - 1; ++i) gens.push_back(i);
    gens.push_back(2 * a + 2);
    gens.push_back(2 * a + 3);
    const NumericalSemigroup S = NumericalSemigroup::make(gens);
    FamilyRow row{"a-family-2", {{"a", a}}, S.generators(), {}, {}, false};
    std::vector<std::int64_t> kgens{0, 1};
    for (std::int64_t i = 4; i <= a - 1; ++i) kgens.push_back(i);
    row.claimed = {{"cdeg", a - 2},
                   {"nu_C", a - 2},
                   {"rho", 3},
                   {"canonical_generators", kgens}};
    row.computed = {{"cdeg", cdeg(S)},
                    {"nu_C", nu(canonical_ideal(S))},
                    {"rho", canonical_index(S)},
                    {"canonical_generators", minimal_generators(canonical_ideal(S))}};
    row.match = row.claimed == row.computed;
    return row;
}

/// H = <a, ..., 2a-1>: K = ({0,1} + H)^(a-2) exactly, and the root
/// L = {0,1} + H attains tau_L = a - 2 = r - 1 (the bound is sharp).
inline FamilyRow maxgen_row(std::int64_t a) {
    if (a < 3) throw param_out_of_range("maxgen family needs a >= 3");
    std::vector<std::int64_t> gens;
    for (std::int64_t i = a; i <= 2 * a - 1; ++i) gens.push_back(i);
    const NumericalSemigroup S = NumericalSemigroup::make(gens);
    FamilyRow row{"maxgen", {{"a", a}}, S.generators(), {}, {}, false};
    const RelativeIdeal K = canonical_ideal(S);
    const RelativeIdeal L = RelativeIdeal::from_generators(S, {0, 1});
    const RelativeIdeal P = power(L, a - 2);
    std::int64_t tau = 0;
    RelativeIdeal Q = ring_ideal(S);
    for (std::int64_t n = 1; n <= S.type() - 1 && tau == 0; ++n) {
        Q = product(Q, L);
        if (Q.window() == K.window()) tau = n;
    }
    row.claimed = {{"K_equals_L_power", true}, {"tau", a - 2}, {"type", a - 1}};
    row.computed = {{"K_equals_L_power", same_set(P, K)}, {"tau", tau}, {"type", S.type()}};
    row.match = row.claimed == row.computed;
    return row;
}

/// Thm-5.15 instances: type 3, K = <1, t^a, t^b>, no proper monomial roots.
inline FamilyRow type3_rootless_row(std::int64_t a, std::int64_t b, std::int64_t e) {
    if (!(0 < a && a < b && b < 2 * a))
        throw param_out_of_range("type3-rootless needs 0 < a < b < 2a");
    if (e < a + b + 2) throw param_out_of_range("type3-rootless needs e >= a+b+2");
    PropertyCheckResult res = check_no_proper_roots_type3(a, b, e);
    FamilyRow row{"type3-rootless", {{"a", a}, {"b", b}, {"e", e}}, res.generators, {}, {}, false};
    row.claimed = {{"type", 3},
                   {"canonical_generators", {0, a, b}},
                   {"rootset", {1}}};
    row.computed = {{"type", res.payload["type"]},
                    {"canonical_generators", res.payload["canonical_generators"]},
                    {"rootset", res.payload["rootset"]}};
    row.match = res.passed();
    return row;
}

}  // namespace cdeg
