#pragma once

/**
 * @file json_io.hpp
 * @brief Canonical JSON forms (schema_version 1).
 *
 * Field order is fixed through nlohmann::ordered_json so that equal values
 * serialize to identical bytes; the determinism and cache round-trip
 * guarantees rest on that.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "check_result.hpp"
#include "families.hpp"
#include "invariants.hpp"
#include "relideal.hpp"

namespace cdeg {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json ideal_to_json(const RelativeIdeal& E) {
    return {{"offset", E.offset()},
            {"window_bits", E.window().to_string01()},
            {"generators", minimal_generators(E)}};
}

inline json witness_to_json(const WitnessSummary& w) {
    return {{"generators", w.generators},
            {"tau", w.tau},
            {"reduction_number", w.reduction},
            {"closed", w.closed}};
}

inline WitnessSummary witness_from_json(const json& j) {
    WitnessSummary w;
    w.generators = j.at("generators").get<std::vector<std::int64_t>>();
    w.tau = j.at("tau").get<std::int64_t>();
    w.reduction = j.at("reduction_number").get<std::int64_t>();
    w.closed = j.at("closed").get<bool>();
    return w;
}

inline json report_to_json(const InvariantReport& r) {
    json j{{"generators", r.generators},
           {"multiplicity", r.multiplicity},
           {"frobenius", r.frobenius},
           {"conductor", r.conductor},
           {"genus", r.genus},
           {"type", r.type},
           {"gorenstein", r.gorenstein},
           {"valuation_ring", r.valuation_ring},
           {"cdeg", r.cdeg},
           {"canonical_index", r.canonical_index},
           {"e0", r.e0},
           {"e1", r.e1},
           {"sally_s0", r.sally_s0},
           {"almost_gorenstein", r.almost_gorenstein},
           {"cdeg_star", r.cdeg_star},
           {"roots_computed", r.roots_computed},
           {"rootset", r.rootset}};
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
    j["root_witnesses"] = std::move(ws);
    return j;
}

inline InvariantReport report_from_json(const json& j) {
    InvariantReport r;
    r.generators = j.at("generators").get<std::vector<std::int64_t>>();
    r.multiplicity = j.at("multiplicity").get<std::int64_t>();
    r.frobenius = j.at("frobenius").get<std::int64_t>();
    r.conductor = j.at("conductor").get<std::int64_t>();
    r.genus = j.at("genus").get<std::int64_t>();
    r.type = j.at("type").get<std::int64_t>();
    r.gorenstein = j.at("gorenstein").get<bool>();
    r.valuation_ring = j.at("valuation_ring").get<bool>();
    r.cdeg = j.at("cdeg").get<std::int64_t>();
    r.canonical_index = j.at("canonical_index").get<std::int64_t>();
    r.e0 = j.at("e0").get<std::int64_t>();
    r.e1 = j.at("e1").get<std::int64_t>();
    r.sally_s0 = j.at("sally_s0").get<std::int64_t>();
    r.almost_gorenstein = j.at("almost_gorenstein").get<bool>();
    r.cdeg_star = j.at("cdeg_star").get<std::int64_t>();
    r.roots_computed = j.at("roots_computed").get<bool>();
    r.rootset = j.at("rootset").get<std::set<std::int64_t>>();
    for (const auto& w : j.at("root_witnesses")) r.witnesses.push_back(witness_from_json(w));
    return r;
}

inline json check_to_json(const PropertyCheckResult& c) {
    json j{{"property", c.property_id},
           {"generators", c.generators},
           {"status", to_string(c.status)}};
    if (c.status == PropertyCheckResult::Status::skipped) j["reason"] = c.reason;
    if (!c.payload.is_null() && !c.payload.empty()) j["payload"] = c.payload;
    return j;
}

inline json family_row_to_json(const FamilyRow& r) {
    return {{"family", r.family},
            {"params", r.params},
            {"generators", r.generators},
            {"claimed", r.claimed},
            {"computed", r.computed},
            {"match", r.match}};
}

}  // namespace cdeg
