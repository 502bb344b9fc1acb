#pragma once

/**
 * @file idealization.hpp
 * @brief Canonical-ideal invariants of the idealization A = R x m.
 *
 * A is never materialized as a ring. Its canonical ideal is the pair
 * module D = L x C with C the canonical ideal embedded inside m^2,
 * L = C : m, and powers obey (K_A)^n = L^n x L^{n-1}C, so every
 * A-invariant reduces to integer-set arithmetic over H. The reduction
 * witness for D is the element (t^a, 0) with a = min(C).
 */

#include <cstdint>
#include <string>

#include "check_result.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "relideal.hpp"
#include "semigroup.hpp"

namespace cdeg {

/// A-submodule U x V of Q(R) x Q(R); valid when m*U <= V.
struct PairIdeal {
    PairIdeal(RelativeIdeal u, RelativeIdeal v) : first(std::move(u)), second(std::move(v)) {
        require_same_semigroup(first, second);
        if (!is_subset(product(maximal_ideal(first.semigroup()), first), second))
            throw precondition_failed("not an A-submodule: m * first is not inside second");
    }
    RelativeIdeal first, second;
};

/// (U x V)(U' x V') = UU' x (UV' + U'V).
inline PairIdeal pair_mul(const PairIdeal& p, const PairIdeal& q) {
    return PairIdeal(product(p.first, q.first),
                     ideal_sum(product(p.first, q.second), product(p.second, q.first)));
}

inline bool pair_same(const PairIdeal& p, const PairIdeal& q) {
    return same_set(p.first, q.first) && same_set(p.second, q.second);
}

struct IdealizationInvariants {
    std::int64_t cdeg_A = 0;
    std::int64_t r_A = 0;
    std::int64_t rho_A = 0;
    // components, kept for payloads and cross-checks
    std::int64_t a = 0;            // min(C), C inside m^2
    std::int64_t lam_L_aR = 0;     // lambda(L/aR)
    std::int64_t lam_C_aM = 0;     // lambda(C/am)
    std::int64_t nu_C = 0;         // lambda(C/mC)
    std::int64_t lam_L_mC = 0;     // lambda(L/mC)
    std::int64_t lam_L_mL = 0;     // lambda(L/mL)
    std::int64_t lam_L_C = 0;      // lambda(L/C)
    bool m_products_equal = false;  // mC = mL as sets
};

namespace detail_idealization {

/// All component lengths of the pair model, no assertions.
inline IdealizationInvariants components(const NumericalSemigroup& S) {
    if (S.is_trivial()) throw dvr_input{};
    const RelativeIdeal R = ring_ideal(S);
    const RelativeIdeal M = maximal_ideal(S);
    const RelativeIdeal C = embed_integral(canonical_ideal(S), embed_target::inside_m_squared);
    const RelativeIdeal L = colon(C, M);
    const RelativeIdeal mC = product(M, C);
    const RelativeIdeal mL = product(M, L);
    IdealizationInvariants out;
    out.a = C.offset();
    out.lam_L_aR = length_between(shift(R, out.a), L);
    out.lam_C_aM = length_between(shift(M, out.a), C);
    out.cdeg_A = out.lam_L_aR + out.lam_C_aM;
    out.nu_C = nu(C);
    out.lam_L_mC = length_between(mC, L);
    out.lam_L_mL = length_between(mL, L);
    out.lam_L_C = length_between(C, L);
    out.m_products_equal = same_set(mC, mL);
    out.r_A = out.nu_C + out.lam_L_mC;
    // rho_A: least n >= 1 with (K_A)^{n+1} = a(K_A)^n componentwise,
    // i.e. L^{n+1} = a + L^n and L^n C = a + L^{n-1} C
    RelativeIdeal ln = L;          // L^n
    RelativeIdeal ln1c = C;        // L^{n-1} C
    const std::int64_t cap = 2 * out.a + 3;
    for (std::int64_t n = 1;; ++n) {
        if (n > cap) throw iteration_cap_exceeded("pair reduction iteration exceeded cap");
        RelativeIdeal ln_next = product(ln, L);
        RelativeIdeal lnc = product(ln, C);
        if (same_set(ln_next, shift(ln, out.a)) && same_set(lnc, shift(ln1c, out.a))) {
            out.rho_A = n;
            break;
        }
        ln1c = lnc;
        ln = ln_next;
    }
    return out;
}

}  // namespace detail_idealization

/// cdeg(A), r(A), rho(A) for A = R x m, computed through the pair model.
/// The component sums must reproduce cdeg(A) = 2 cdeg(R) + 2 and
/// r(A) = 2 r(R) + 1 exactly, and mC = mL; any mismatch is an error.
inline IdealizationInvariants idealization_invariants(const NumericalSemigroup& S) {
    IdealizationInvariants inv = detail_idealization::components(S);
    if (!inv.m_products_equal)
        throw internal_inconsistency("mC != mL in the pair model");
    if (inv.lam_L_mC != inv.lam_L_mL)
        throw internal_inconsistency("lambda(L/mC) != lambda(L/mL)");
    if (inv.cdeg_A != 2 * cdeg(S) + 2)
        throw internal_inconsistency("cdeg(A) != 2 cdeg(R) + 2");
    if (inv.r_A != 2 * S.type() + 1)
        throw internal_inconsistency("r(A) != 2 r(R) + 1");
    return inv;
}

/// A is almost Gorenstein iff R is: checked on the computed values.
inline PropertyCheckResult idealization_ag_transfer(const NumericalSemigroup& S) {
    const std::string id = "cor6.9";
    const IdealizationInvariants inv = detail_idealization::components(S);
    const bool ag_R = cdeg(S) == S.type() - 1;
    const bool ag_A = inv.cdeg_A == inv.r_A - 1;
    nlohmann::ordered_json payload{
        {"cdeg_A", inv.cdeg_A}, {"r_A", inv.r_A}, {"cdeg", cdeg(S)}, {"type", S.type()}};
    if (ag_R != ag_A) return PropertyCheckResult::fail(id, S.generators(), payload);
    return PropertyCheckResult::pass(id, S.generators(), payload);
}

struct IndexExperiment {
    std::int64_t rho_R = 0;
    std::int64_t rho_A = 0;
    bool equal = false;
};

/// Data for the open question whether rho(R) = rho(R x m). No assertion.
inline IndexExperiment idealization_index_experiment(const NumericalSemigroup& S) {
    const IdealizationInvariants inv = detail_idealization::components(S);
    IndexExperiment out;
    out.rho_R = canonical_index(S);
    out.rho_A = inv.rho_A;
    out.equal = out.rho_R == out.rho_A;
    return out;
}

}  // namespace cdeg
