#pragma once

/**
 * @file errors.hpp
 * @brief Exception types thrown by the cdeg library.
 *
 * Every domain error has its own type so callers (and the CLI) can map
 * violated preconditions to diagnostics without string matching.
 */

#include <stdexcept>
#include <string>

namespace cdeg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// semigroup construction
struct empty_generators : error {
    empty_generators() : error("generator list is empty") {}
};
struct nonpositive_generator : error {
    explicit nonpositive_generator(long long g)
        : error("generator " + std::to_string(g) + " is not positive") {}
};
struct gcd_not_one : error {
    gcd_not_one() : error("gcd of generators is not 1") {}
};

// enumeration
struct genus_cap_exceeded : error {
    genus_cap_exceeded(long long requested, long long cap)
        : error("genus bound " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)) {}
};

// ideal arithmetic
struct semigroup_mismatch : error {
    semigroup_mismatch() : error("ideals live over different semigroups") {}
};
struct not_contained : error {
    not_contained() : error("first ideal is not contained in the second") {}
};
struct iteration_cap_exceeded : error {
    explicit iteration_cap_exceeded(const std::string& what) : error(what) {}
};
struct arithmetic_overflow : error {
    arithmetic_overflow() : error("64-bit integer overflow in ideal arithmetic") {}
};

// invariants / idealization
struct internal_inconsistency : error {
    explicit internal_inconsistency(const std::string& what)
        : error("internal inconsistency (implementation bug): " + what) {}
};
struct dvr_input : error {
    dvr_input() : error("operation is undefined for the valuation ring <1>") {}
};
struct precondition_failed : error {
    explicit precondition_failed(const std::string& what) : error(what) {}
};

// families
struct hypothesis_violated : error {
    explicit hypothesis_violated(const std::string& what) : error(what) {}
};
struct param_out_of_range : error {
    explicit param_out_of_range(const std::string& what) : error(what) {}
};

// corpus / cache
struct unknown_property : error {
    explicit unknown_property(const std::string& id)
        : error("unknown property id: " + id) {}
};
struct io_error : error {
    explicit io_error(const std::string& what) : error(what) {}
};
struct format_version_mismatch : error {
    explicit format_version_mismatch(const std::string& what) : error(what) {}
};
struct corrupt_record : error {
    corrupt_record(long long line, const std::string& what)
        : error("corrupt cache record at line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    long long line_number;
};

}  // namespace cdeg
