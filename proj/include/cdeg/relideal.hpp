#pragma once

/**
 * @file relideal.hpp
 * @brief Exact arithmetic of relative (fractional monomial) ideals.
 *
 * A relative ideal of H is a set E of integers, bounded below, with
 * E + H <= E. It is stored as an offset m = min(E) plus a bit window over
 * [m, m + F] (F the Frobenius number of H): every integer above m + F lies
 * in E, so the window determines the set and set equality is offset plus
 * window equality. Bit 0 of the window is always set.
 *
 * Products are Minkowski sums of windows. Bits falling above the result
 * window cannot be missed by truncation: they are implied members anyway.
 *
 * The colon (E1 : E2) scan range [min1 - min2 - F, min1 - min2 + F] is
 * complete: x + min2 >= min1 forces x >= min1 - min2, and any
 * x > min1 - min2 + F satisfies x + y > min1 + F for all y in E2, so all
 * larger integers are members.
 *
 * Ideals hold a non-owning reference to their semigroup, which must
 * outlive them. All values are immutable after construction.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "detail/bits.hpp"
#include "errors.hpp"
#include "semigroup.hpp"

namespace cdeg {

class RelativeIdeal {
public:
    /// E = union of g + H over the given generators.
    static RelativeIdeal from_generators(const NumericalSemigroup& S,
                                         const std::vector<std::int64_t>& gens) {
        if (gens.empty()) throw empty_generators{};
        const std::int64_t m = *std::min_element(gens.begin(), gens.end());
        detail::bitvec w(window_length(S));
        for (auto g : gens)
            for (int i = static_cast<int>(g - m); i < w.size(); ++i)
                if (S.contains(m + i - g)) w.set(i);
        return RelativeIdeal(S, m, std::move(w));
    }

    const NumericalSemigroup& semigroup() const { return *sg_; }
    std::int64_t offset() const { return offset_; }  // == min(E)
    const detail::bitvec& window() const { return window_; }

    bool contains(std::int64_t x) const {
        const std::int64_t i = x - offset_;
        if (i < 0) return false;
        if (i >= window_.size()) return true;
        return window_.test(static_cast<int>(i));
    }

    /// Least s with [s, inf) <= E.
    std::int64_t ray_start() const { return offset_ + window_.highest_unset() + 1; }

    static int window_length(const NumericalSemigroup& S) {
        return static_cast<int>(std::max<std::int64_t>(S.frobenius(), 0)) + 1;
    }

private:
    RelativeIdeal(const NumericalSemigroup& S, std::int64_t m, detail::bitvec w)
        : sg_(&S), offset_(m), window_(std::move(w)) {
        // normalize: offset must be the true minimum
        if (!window_.test(0)) {
            int first = 0;
            while (!window_.test(first)) ++first;  // nonempty by construction
            detail::bitvec shifted(window_.size());
            for (int i = first; i < window_.size(); ++i)
                if (window_.test(i)) shifted.set(i - first);
            for (int i = window_.size() - first; i < window_.size(); ++i) shifted.set(i);
            offset_ += first;
            window_ = std::move(shifted);
        }
    }

    friend RelativeIdeal ring_ideal(const NumericalSemigroup&);
    friend RelativeIdeal maximal_ideal(const NumericalSemigroup&);
    friend RelativeIdeal canonical_ideal(const NumericalSemigroup&);
    friend RelativeIdeal product(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal colon(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal ideal_sum(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal shift(const RelativeIdeal&, std::int64_t);
    friend class NormalizedIdealEnumerator;

    const NumericalSemigroup* sg_;
    std::int64_t offset_;
    detail::bitvec window_;
};

inline void require_same_semigroup(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (!(a.semigroup() == b.semigroup())) throw semigroup_mismatch{};
}

/// H itself as a relative ideal (offset 0).
inline RelativeIdeal ring_ideal(const NumericalSemigroup& S) {
    detail::bitvec w(RelativeIdeal::window_length(S));
    for (int i = 0; i < w.size(); ++i)
        if (S.contains(i)) w.set(i);
    return RelativeIdeal(S, 0, std::move(w));
}

/// The maximal ideal M = H \ {0}.
inline RelativeIdeal maximal_ideal(const NumericalSemigroup& S) {
    return RelativeIdeal::from_generators(S, S.generators());
}

/// K = {x : F - x not in H}, normalized with offset 0. For H = <1> this is
/// H itself (Gorenstein iff K is a translate of H).
inline RelativeIdeal canonical_ideal(const NumericalSemigroup& S) {
    detail::bitvec w(RelativeIdeal::window_length(S));
    for (int i = 0; i < w.size(); ++i)
        if (!S.contains(S.frobenius() - i)) w.set(i);
    return RelativeIdeal(S, 0, std::move(w));
}

inline RelativeIdeal shift(const RelativeIdeal& E, std::int64_t z) {
    return RelativeIdeal(E.semigroup(), detail::checked_add(E.offset(), z), E.window());
}

inline RelativeIdeal normalized(const RelativeIdeal& E) { return shift(E, -E.offset()); }

/// Set equality (identical ideals, not just isomorphic ones).
inline bool same_set(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    return a.offset() == b.offset() && a.window() == b.window();
}

inline RelativeIdeal product(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    detail::bitvec w(a.window().size());
    a.window().for_each_set([&](int i) { w.or_with_shifted(b.window(), i); });
    return RelativeIdeal(a.semigroup(), detail::checked_add(a.offset(), b.offset()), std::move(w));
}

inline RelativeIdeal power(const RelativeIdeal& E, std::int64_t n) {
    RelativeIdeal P = ring_ideal(E.semigroup());
    for (std::int64_t i = 0; i < n; ++i) P = product(P, E);
    return P;
}

/// (E1 : E2) = {x : x + E2 <= E1}.
inline RelativeIdeal colon(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    const std::int64_t fw = a.window().size() - 1;
    const std::int64_t lo = a.offset() - b.offset() - fw;
    const std::int64_t hi = a.offset() - b.offset() + fw;  // every x > hi qualifies
    const std::int64_t ray_a = a.ray_start();
    std::vector<bool> in(static_cast<std::size_t>(hi - lo + 1), false);
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (x + b.offset() + fw + 1 < ray_a) continue;  // tail of E2 escapes E1
        const bool ok = b.window().all_of_set(
            [&](int j) { return a.contains(x + b.offset() + j); });
        in[static_cast<std::size_t>(x - lo)] = ok;
    }
    std::int64_t m = hi + 1;
    for (std::int64_t x = lo; x <= hi; ++x)
        if (in[static_cast<std::size_t>(x - lo)]) {
            m = x;
            break;
        }
    detail::bitvec w(a.window().size());
    for (int i = 0; i < w.size(); ++i) {
        const std::int64_t x = m + i;
        if (x > hi || in[static_cast<std::size_t>(x - lo)]) w.set(i);
    }
    return RelativeIdeal(a.semigroup(), m, std::move(w));
}

/// Module sum E1 + E2, i.e. the union of the value sets.
inline RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    const std::int64_t m = std::min(a.offset(), b.offset());
    detail::bitvec w(a.window().size());
    for (int i = 0; i < w.size(); ++i)
        if (a.contains(m + i) || b.contains(m + i)) w.set(i);
    return RelativeIdeal(a.semigroup(), m, std::move(w));
}

inline bool is_subset(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    const bool window_ok = a.window().all_of_set(
        [&](int i) { return b.contains(a.offset() + i); });
    return window_ok && a.offset() + a.window().size() >= b.ray_start();
}

/// |E_big \ E_small| for E_small <= E_big.
inline std::int64_t length_between(const RelativeIdeal& e_small, const RelativeIdeal& e_big) {
    if (!is_subset(e_small, e_big)) throw not_contained{};
    std::int64_t n = 0;
    const std::int64_t top = e_small.offset() + e_small.window().size() - 1;
    for (std::int64_t x = e_big.offset(); x <= top; ++x)
        if (e_big.contains(x) && !e_small.contains(x)) ++n;
    return n;
}

/// The unique monomial minimal generating set E \ (M + E), sorted.
inline std::vector<std::int64_t> minimal_generators(const RelativeIdeal& E) {
    const NumericalSemigroup& S = E.semigroup();
    std::vector<std::int64_t> out;
    const std::int64_t e = S.multiplicity();
    for (int i = 0; i < E.window().size(); ++i) {
        if (!E.window().test(i)) continue;
        bool decomposable = false;
        for (std::int64_t h = e; h <= i && !decomposable; ++h)
            if (S.contains(h) && E.window().test(static_cast<int>(i - h))) decomposable = true;
        if (!decomposable) out.push_back(E.offset() + i);
    }
    return out;
}

/// nu(E): minimal number of generators.
inline std::int64_t nu(const RelativeIdeal& E) {
    return static_cast<std::int64_t>(minimal_generators(E).size());
}

/// Hom(L, L) = R, i.e. (L : L) = H.
inline bool is_closed(const RelativeIdeal& L) {
    return same_set(colon(L, L), ring_ideal(L.semigroup()));
}

/// lambda((E : M) / E), the socle length. x + M <= E reduces to
/// x + g in E per generator g because E is closed under adding H.
inline std::int64_t socle_length(const RelativeIdeal& E) {
    const NumericalSemigroup& S = E.semigroup();
    std::int64_t n = 0;
    const std::int64_t top = E.offset() + E.window().size() - 1;
    for (std::int64_t x = E.offset() - S.multiplicity(); x <= top; ++x) {
        if (E.contains(x)) continue;
        bool socle = true;
        for (auto g : S.generators())
            if (!E.contains(x + g)) {
                socle = false;
                break;
            }
        n += socle;
    }
    return n;
}

/// Module isomorphism of monomial ideals is integer translation of value
/// sets; returns z with E2 = z + E1 when the windows coincide.
inline std::optional<std::int64_t> iso_class_equal(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_semigroup(a, b);
    if (a.window() == b.window()) return b.offset() - a.offset();
    return std::nullopt;
}

enum class embed_target { inside_ring, inside_m_squared };

/// Smallest s in H with s + E contained in H (or in M*M).
inline RelativeIdeal embed_integral(const RelativeIdeal& E, embed_target where) {
    const NumericalSemigroup& S = E.semigroup();
    const RelativeIdeal target = where == embed_target::inside_ring
                                     ? ring_ideal(S)
                                     : product(maximal_ideal(S), maximal_ideal(S));
    // s0 = ray_start(target) - min(E) always admits the shift; the next
    // H-member above it is at most conductor() further up
    const std::int64_t cap =
        std::max<std::int64_t>(target.ray_start() - E.offset(), 0) + S.conductor() + 1;
    for (std::int64_t s = 0; s <= cap; ++s) {
        if (!S.contains(s)) continue;
        RelativeIdeal cand = shift(E, s);
        if (is_subset(cand, target)) return cand;
    }
    throw internal_inconsistency("embed_integral found no admissible shift");
}

}  // namespace cdeg
