#pragma once

/**
 * @file check_result.hpp
 * @brief Outcome of one named theorem-check on one semigroup.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cdeg {

struct PropertyCheckResult {
    enum class Status { pass, fail, skipped };

    std::string property_id;
    std::vector<std::int64_t> generators;
    Status status = Status::pass;
    std::string reason;             // set when skipped
    nlohmann::ordered_json payload;  // computed quantities; both sides on fail

    bool passed() const { return status == Status::pass; }

    static PropertyCheckResult pass(std::string id, std::vector<std::int64_t> gens,
                                    nlohmann::ordered_json payload = {}) {
        return {std::move(id), std::move(gens), Status::pass, "", std::move(payload)};
    }
    static PropertyCheckResult fail(std::string id, std::vector<std::int64_t> gens,
                                    nlohmann::ordered_json payload) {
        return {std::move(id), std::move(gens), Status::fail, "", std::move(payload)};
    }
    static PropertyCheckResult skip(std::string id, std::vector<std::int64_t> gens,
                                    std::string reason) {
        return {std::move(id), std::move(gens), Status::skipped, std::move(reason), {}};
    }
};

inline const char* to_string(PropertyCheckResult::Status s) {
    switch (s) {
        case PropertyCheckResult::Status::pass: return "pass";
        case PropertyCheckResult::Status::fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace cdeg
