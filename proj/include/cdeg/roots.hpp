#pragma once

/**
 * @file roots.hpp
 * @brief Monomial roots of the canonical ideal and the rootset.
 *
 * A root of C is an ideal L with L^n ~ C for some n; tau_L(C) is the least
 * such n and the rootset is the set of attained tau values. The search
 * space is monomial ideals normalized to offset 0: isomorphism classes of
 * monomial fractional ideals are exactly translation classes, so every
 * root has a normalized representative. Offset-0 ideals are in bijection
 * with subsets T of the gaps such that H union T is closed under adding
 * generators, which a DFS over gaps in decreasing order enumerates with
 * no wasted leaves.
 *
 * For non-Gorenstein rings the exponent search stops at r - 1: that bound
 * is complete because tau_L(C) <= min(r - 1, red(L)). The Gorenstein case
 * is {1} (a non-principal L with a principal power would be invertible,
 * hence principal).
 *
 * The reported set is the *monomial* rootset; no completeness claim is
 * made for non-monomial ideals outside the hypotheses of the type-3
 * family check.
 */

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "check_result.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "relideal.hpp"
#include "semigroup.hpp"

namespace cdeg {

inline constexpr std::int64_t default_roots_genus_cap = 16;

class NormalizedIdealEnumerator {
public:
    static RelativeIdeal make(const NumericalSemigroup& S, detail::bitvec w) {
        return RelativeIdeal(S, 0, std::move(w));
    }
};

/// Visit every relative ideal E with min(E) = 0 (H <= E <= Z>=0) exactly
/// once. Gaps are decided in decreasing order; including gap t requires
/// t + g to be present for every generator g, which is already decided.
inline void enumerate_normalized_ideals(const NumericalSemigroup& S,
                                        const std::function<void(const RelativeIdeal&)>& visit,
                                        std::int64_t genus_cap = default_roots_genus_cap) {
    if (S.genus() > genus_cap) throw genus_cap_exceeded(S.genus(), genus_cap);
    detail::bitvec w(RelativeIdeal::window_length(S));
    for (int i = 0; i < w.size(); ++i)
        if (S.contains(i)) w.set(i);
    const auto& gaps = S.gaps();
    const std::int64_t fro = S.frobenius();
    std::function<void(int)> dfs = [&](int idx) {
        if (idx < 0) {
            visit(NormalizedIdealEnumerator::make(S, w));
            return;
        }
        const std::int64_t t = gaps[static_cast<std::size_t>(idx)];
        dfs(idx - 1);
        bool can_include = true;
        for (auto g : S.generators())
            if (t + g <= fro && !w.test(static_cast<int>(t + g))) {
                can_include = false;
                break;
            }
        if (can_include) {
            w.set(static_cast<int>(t), true);
            dfs(idx - 1);
            w.set(static_cast<int>(t), false);
        }
    };
    dfs(static_cast<int>(gaps.size()) - 1);
}

struct RootWitness {
    RelativeIdeal ideal;  // normalized, offset 0
    std::int64_t tau;
    std::int64_t reduction;
    bool closed;
};

struct RootsetResult {
    std::set<std::int64_t> taus;
    std::vector<RootWitness> witnesses;
};

inline WitnessSummary summarize(const RootWitness& w) {
    return {minimal_generators(w.ideal), w.tau, w.reduction, w.closed};
}

/// The monomial rootset with one witness per root class, witnesses ordered
/// lexicographically by window.
inline RootsetResult rootset(const NumericalSemigroup& S,
                             std::int64_t genus_cap = default_roots_genus_cap) {
    RootsetResult out;
    const RelativeIdeal K = canonical_ideal(S);
    const std::int64_t r = S.type();
    if (S.is_trivial() || r == 1) {
        // K ~ R; the ring itself is the witness
        RelativeIdeal R = ring_ideal(S);
        out.taus = {1};
        out.witnesses.push_back({R, 1, reduction_number(R), is_closed(R)});
        return out;
    }
    enumerate_normalized_ideals(
        S,
        [&](const RelativeIdeal& L) {
            RelativeIdeal P = L;  // powers of an offset-0 ideal keep offset 0
            for (std::int64_t n = 1; n <= r - 1; ++n) {
                if (n > 1) P = product(P, L);
                if (P.window() == K.window()) {
                    out.witnesses.push_back({L, n, reduction_number(L), is_closed(L)});
                    out.taus.insert(n);
                    break;
                }
            }
        },
        genus_cap);
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const RootWitness& a, const RootWitness& b) {
                  return lex_less(a.ideal.window(), b.ideal.window());
              });
    return out;
}

/// Fill the rootset summary of a report (kept separate so invariants.hpp
/// stays independent of the enumeration).
inline void fill_rootset(InvariantReport& rep, const NumericalSemigroup& S,
                         std::int64_t genus_cap = default_roots_genus_cap) {
    RootsetResult rs = rootset(S, genus_cap);
    rep.roots_computed = true;
    rep.rootset = rs.taus;
    rep.witnesses.clear();
    for (const auto& w : rs.witnesses) rep.witnesses.push_back(summarize(w));
}

namespace detail_roots {

/// Shared checker: witness-level root theorems given a computed rootset.
inline PropertyCheckResult check_from(const NumericalSemigroup& S,
                                      const std::set<std::int64_t>& taus,
                                      const std::vector<WitnessSummary>& witnesses) {
    const std::string id = "thm5.8";
    const std::int64_t r = S.type();
    const RelativeIdeal K = canonical_ideal(S);
    nlohmann::ordered_json payload{{"rootset", taus}, {"type", r}};
    if (r == 1) {
        if (taus != std::set<std::int64_t>{1})
            return PropertyCheckResult::fail(id, S.generators(), payload);
        return PropertyCheckResult::pass(id, S.generators(), payload);
    }
    if (static_cast<std::int64_t>(taus.size()) > r - 1)
        return PropertyCheckResult::fail(id, S.generators(), payload);
    if (r == 2 && taus != std::set<std::int64_t>{1})  // type 2: C's class is the only root
        return PropertyCheckResult::fail(id, S.generators(), payload);
    for (const auto& ws : witnesses) {
        const RelativeIdeal L = RelativeIdeal::from_generators(S, ws.generators);
        if (!is_closed(L)) {
            payload["open_witness"] = ws.generators;
            return PropertyCheckResult::fail(id, S.generators(), payload);
        }
        // unique exponent per witness class (else C would be principal)
        std::int64_t matches = 0;
        RelativeIdeal P = ring_ideal(S);
        for (std::int64_t n = 1; n <= r - 1; ++n) {
            P = product(P, L);
            if (P.window() == K.window()) ++matches;
        }
        if (matches != 1) {
            payload["witness"] = ws.generators;
            payload["exponent_matches"] = matches;
            return PropertyCheckResult::fail(id, S.generators(), payload);
        }
    }
    return PropertyCheckResult::pass(id, S.generators(), payload);
}

inline PropertyCheckResult check_tau_bound(const NumericalSemigroup& S,
                                           const std::vector<WitnessSummary>& witnesses) {
    const std::string id = "prop5.6";
    const std::int64_t r = S.type();
    for (const auto& ws : witnesses) {
        if (ws.tau > ws.reduction || (r >= 2 && ws.tau > r - 1)) {
            nlohmann::ordered_json payload{{"witness", ws.generators},
                                           {"tau", ws.tau},
                                           {"red_L", ws.reduction},
                                           {"type", r}};
            return PropertyCheckResult::fail(id, S.generators(), payload);
        }
    }
    return PropertyCheckResult::pass(id, S.generators(),
                                     {{"witness_count", witnesses.size()}});
}

/// rho(R) <= floor((red(I) + p - 1) / p) for I = L^(tau/p), per divisor p.
inline PropertyCheckResult check_index_bound(const NumericalSemigroup& S,
                                             const std::vector<WitnessSummary>& witnesses,
                                             std::int64_t rho) {
    const std::string id = "prop5.9";
    for (const auto& ws : witnesses) {
        const RelativeIdeal L = RelativeIdeal::from_generators(S, ws.generators);
        for (std::int64_t p = 1; p <= ws.tau; ++p) {
            if (ws.tau % p != 0) continue;
            const RelativeIdeal I = power(L, ws.tau / p);
            const std::int64_t red_i = reduction_number(I);
            const std::int64_t bound = (red_i + p - 1) / p;
            if (rho > bound) {
                nlohmann::ordered_json payload{{"witness", ws.generators},
                                               {"tau", ws.tau},
                                               {"p", p},
                                               {"red_I", red_i},
                                               {"bound", bound},
                                               {"rho", rho}};
                return PropertyCheckResult::fail(id, S.generators(), payload);
            }
        }
    }
    return PropertyCheckResult::pass(id, S.generators(),
                                     {{"witness_count", witnesses.size()}});
}

}  // namespace detail_roots

/// Root theorems on one semigroup: |rootset| < r, closed witnesses, unique
/// exponents, and the type-2 rootset {1}. Gorenstein rings take the
/// adapted branch (rootset must be {1}).
inline PropertyCheckResult verify_root_theorems(const NumericalSemigroup& S,
                                                std::int64_t genus_cap = default_roots_genus_cap) {
    RootsetResult rs = rootset(S, genus_cap);
    std::vector<WitnessSummary> ws;
    for (const auto& w : rs.witnesses) ws.push_back(summarize(w));
    return detail_roots::check_from(S, rs.taus, ws);
}

inline PropertyCheckResult check_root_index_bound(const NumericalSemigroup& S,
                                                  std::int64_t genus_cap = default_roots_genus_cap) {
    RootsetResult rs = rootset(S, genus_cap);
    std::vector<WitnessSummary> ws;
    for (const auto& w : rs.witnesses) ws.push_back(summarize(w));
    return detail_roots::check_index_bound(S, ws, canonical_index(S));
}

/// The rootless type-3 family: H = <e+i : 0 <= i <= e-2, i not in
/// {e-b-1, e-a-1}>. Asserts K has minimal generators {0, a, b}, type 3,
/// and monomial rootset {1} (no square roots exist).
inline PropertyCheckResult check_no_proper_roots_type3(std::int64_t a, std::int64_t b,
                                                       std::int64_t e) {
    const std::string id = "thm5.15";
    if (!(0 < a && a < b)) throw hypothesis_violated("need 0 < a < b");
    if (!(b < 2 * a)) throw hypothesis_violated("need b < 2a");
    if (e < a + b + 2) throw hypothesis_violated("need e >= a+b+2");
    std::vector<std::int64_t> gens;
    for (std::int64_t i = 0; i <= e - 2; ++i)
        if (i != e - b - 1 && i != e - a - 1) gens.push_back(e + i);
    const NumericalSemigroup S = NumericalSemigroup::make(gens);
    nlohmann::ordered_json payload{{"a", a}, {"b", b}, {"e", e}, {"type", S.type()}};
    const auto kgens = minimal_generators(canonical_ideal(S));
    payload["canonical_generators"] = kgens;
    if (S.type() != 3 || kgens != std::vector<std::int64_t>{0, a, b})
        return PropertyCheckResult::fail(id, S.generators(), payload);
    // rootset = {1} iff no L with L^2 = K (tau can only be 1 or 2 here)
    const RelativeIdeal K = canonical_ideal(S);
    bool square_root_free = true;
    enumerate_normalized_ideals(
        S,
        [&](const RelativeIdeal& L) {
            if (square_root_free && product(L, L).window() == K.window())
                square_root_free = false;
        },
        S.genus());
    payload["rootset"] = square_root_free ? std::vector<std::int64_t>{1}
                                          : std::vector<std::int64_t>{1, 2};
    if (!square_root_free) return PropertyCheckResult::fail(id, S.generators(), payload);
    return PropertyCheckResult::pass(id, S.generators(), payload);
}

}  // namespace cdeg
