#pragma once

/**
 * @file invariants.hpp
 * @brief Ring invariants read off the canonical ideal: canonical degree,
 *        canonical index, Hilbert coefficients, Sally multiplicity,
 *        almost-Gorenstein detection.
 *
 * Each invariant with more than one algebraic route is computed by all of
 * them and the routes must agree exactly; a disagreement is an
 * implementation bug and throws internal_inconsistency.
 *
 * cdeg routes: lambda(C/(a)) with a = min(C); e0(C) - lambda(R/C) where
 * e0(C) = a via the principal monomial reduction (t^a); and |K \ H|.
 *
 * e1 routes: the Sally-module sum over lambda(C^{j+1}/aC^j), and the exact
 * affine fit of lambda(R/C^n) = e0*n - e1 at three consecutive n past the
 * reduction number (exact integers, no tolerance).
 */

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "check_result.hpp"
#include "errors.hpp"
#include "relideal.hpp"
#include "semigroup.hpp"

namespace cdeg {

/// Least n >= 0 with E^{n+1} = a E^n for the principal reduction a = min(E).
/// Translation invariant, so the powers are iterated on the normalized
/// ideal, where the cap F+2 is provable (each unstable step grows the
/// window by at least one element).
inline std::int64_t reduction_number(const RelativeIdeal& E) {
    const RelativeIdeal N = normalized(E);
    RelativeIdeal P = ring_ideal(E.semigroup());
    const std::int64_t cap = N.window().size() + 2;
    for (std::int64_t n = 0; n <= cap; ++n) {
        RelativeIdeal next = product(P, N);
        if (same_set(next, P)) return n;
        P = next;
    }
    throw iteration_cap_exceeded("reduction-number iteration exceeded window bound");
}

inline std::int64_t cdeg(const NumericalSemigroup& S) {
    if (S.is_trivial()) return 0;
    const RelativeIdeal R = ring_ideal(S);
    const RelativeIdeal K = canonical_ideal(S);
    const RelativeIdeal C = embed_integral(K, embed_target::inside_ring);
    const std::int64_t a = C.offset();
    const std::int64_t via_reduction = length_between(shift(R, a), C);
    const std::int64_t via_e0 = a - length_between(C, R);
    const std::int64_t via_k = length_between(R, K);
    if (via_reduction != via_e0 || via_e0 != via_k)
        throw internal_inconsistency("cdeg routes disagree: " + std::to_string(via_reduction) +
                                     ", " + std::to_string(via_e0) + ", " + std::to_string(via_k));
    return via_reduction;
}

/// rho(R) = red(C), the reduction number of the canonical ideal.
inline std::int64_t canonical_index(const NumericalSemigroup& S) {
    if (S.is_trivial()) return 0;
    const std::int64_t rho = reduction_number(canonical_ideal(S));
    const std::int64_t r = S.type();
    if (r >= 2 && rho == 1)
        throw internal_inconsistency("rho = 1 for a non-Gorenstein ring");
    if (r >= 2 && cdeg(S) == r - 1 && rho != 2)
        throw internal_inconsistency("rho != 2 for an almost Gorenstein ring");
    return rho;
}

inline std::int64_t hilbert_e1(const NumericalSemigroup& S) {
    if (S.is_trivial()) throw dvr_input{};
    const RelativeIdeal R = ring_ideal(S);
    const RelativeIdeal C = embed_integral(canonical_ideal(S), embed_target::inside_ring);
    const std::int64_t a = C.offset();
    const std::int64_t rho = reduction_number(C);
    std::int64_t sally = 0;
    RelativeIdeal P = R;  // C^j
    for (std::int64_t j = 0; j < rho; ++j) {
        RelativeIdeal next = product(P, C);
        sally += length_between(shift(P, a), next);
        P = next;
    }
    // exact affine fit at n = rho+1, rho+2, rho+3
    P = power(C, rho + 1);
    std::int64_t fitted = 0;
    for (std::int64_t n = rho + 1; n <= rho + 3; ++n) {
        const std::int64_t e1_n = a * n - length_between(P, R);
        if (n == rho + 1)
            fitted = e1_n;
        else if (e1_n != fitted)
            throw internal_inconsistency("Hilbert polynomial fit is not affine past rho");
        P = product(P, C);
    }
    if (fitted != sally)
        throw internal_inconsistency("e1 routes disagree: sally " + std::to_string(sally) +
                                     ", fit " + std::to_string(fitted));
    return sally;
}

/// s0 = e1(C) - cdeg(R), the multiplicity of the Sally module.
inline std::int64_t sally_multiplicity(const NumericalSemigroup& S) {
    if (S.is_trivial()) throw dvr_input{};
    const std::int64_t s0 = hilbert_e1(S) - cdeg(S);
    if (s0 < 0) throw internal_inconsistency("negative Sally multiplicity");
    return s0;
}

/// cdeg = r - 1, cross-checked against almost symmetry 2*genus = F + type.
inline bool almost_gorenstein(const NumericalSemigroup& S) {
    if (S.is_trivial()) throw dvr_input{};
    const bool via_cdeg = cdeg(S) == S.type() - 1;
    const bool via_symmetry = 2 * S.genus() == S.frobenius() + S.type();
    if (via_cdeg != via_symmetry)
        throw internal_inconsistency("almost-Gorenstein routes disagree");
    return via_cdeg;
}

struct WitnessSummary {
    std::vector<std::int64_t> generators;  // of the normalized root L
    std::int64_t tau = 0;
    std::int64_t reduction = 0;
    bool closed = false;

    friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

struct InvariantReport {
    std::vector<std::int64_t> generators;
    std::int64_t multiplicity = 1;
    std::int64_t frobenius = -1;
    std::int64_t conductor = 0;
    std::int64_t genus = 0;
    std::int64_t type = 1;
    bool gorenstein = true;
    bool valuation_ring = false;
    std::int64_t cdeg = 0;
    std::int64_t canonical_index = 0;
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;
    std::int64_t sally_s0 = 0;
    bool almost_gorenstein = true;
    std::int64_t cdeg_star = 0;
    bool roots_computed = false;
    std::set<std::int64_t> rootset;
    std::vector<WitnessSummary> witnesses;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// All invariants of one ring, with every cross-route check run. Rootset
/// fields are filled separately (see roots.hpp / corpus.hpp).
inline InvariantReport report(const NumericalSemigroup& S) {
    InvariantReport rep;
    rep.generators = S.generators();
    rep.multiplicity = S.multiplicity();
    rep.frobenius = S.frobenius();
    rep.conductor = S.conductor();
    rep.genus = S.genus();
    rep.type = S.type();
    if (S.is_trivial()) {
        rep.valuation_ring = true;  // invariants degenerate
        return rep;
    }
    const RelativeIdeal R = ring_ideal(S);
    const RelativeIdeal C = embed_integral(canonical_ideal(S), embed_target::inside_ring);
    rep.gorenstein = S.type() == 1;
    rep.cdeg = cdeg(S);
    rep.canonical_index = canonical_index(S);
    rep.e0 = C.offset();
    rep.e1 = hilbert_e1(S);
    rep.sally_s0 = rep.e1 - rep.cdeg;
    rep.almost_gorenstein = almost_gorenstein(S);
    // cdeg* = deg(gr_C(R)) - deg(R/C); in the one-dimensional equimultiple
    // model deg(gr_C(R)) = lambda(R/(a)) = min(C), so this is the e0 route
    rep.cdeg_star = rep.e0 - length_between(C, R);
    if (rep.cdeg_star != rep.cdeg)
        throw internal_inconsistency("cdeg* differs from cdeg");
    if (nu(canonical_ideal(S)) != rep.type)
        throw internal_inconsistency("nu(K) differs from |PF|");
    if (rep.gorenstein != (rep.cdeg == 0))
        throw internal_inconsistency("cdeg = 0 must characterize Gorenstein");
    return rep;
}

/// The irreducible-ideal bound: for an irreducible m-primary E inside m^2
/// (socle length 1), lambda(E/(a)) >= r - 1, and red(E) <= 2 at equality.
inline PropertyCheckResult check_irreducible_ideal_bound(const NumericalSemigroup& S,
                                                         const RelativeIdeal& E) {
    const std::string id = "prop2.6";
    if (S.is_trivial()) throw precondition_failed("valuation ring");
    const RelativeIdeal R = ring_ideal(S);
    const RelativeIdeal M = maximal_ideal(S);
    if (!is_subset(E, R)) throw precondition_failed("ideal is not integral");
    if (!is_subset(E, product(M, M))) throw precondition_failed("ideal is not inside m^2");
    const std::int64_t socle = socle_length(E);
    if (socle != 1)
        return PropertyCheckResult::skip(id, S.generators(),
                                         "not irreducible (socle length " +
                                             std::to_string(socle) + ")");
    const std::int64_t a = E.offset();
    const std::int64_t lam = length_between(shift(R, a), E);
    const std::int64_t r = S.type();
    nlohmann::ordered_json payload{{"lambda_E_over_a", lam}, {"type", r}};
    if (lam < r - 1) return PropertyCheckResult::fail(id, S.generators(), payload);
    if (lam == r - 1) {
        const std::int64_t red = reduction_number(E);
        payload["reduction_number"] = red;
        if (red > 2) return PropertyCheckResult::fail(id, S.generators(), payload);
    }
    return PropertyCheckResult::pass(id, S.generators(), payload);
}

}  // namespace cdeg
