#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups: construction, basic invariants, enumeration.
 *
 * A numerical semigroup H is a cofinite additive submonoid of the
 * nonnegative integers. It models the value semigroup of the ring
 * k[[t^a : a in gens]]. Membership above the Frobenius number is constant,
 * so a bit window over [0, conductor] gives O(1) membership everywhere.
 *
 * The trivial semigroup <1> (the valuation ring / DVR case) is representable:
 * frobenius = -1, no gaps, and by convention PF(<1>) = {-1} so that the
 * Frobenius number always belongs to the pseudo-Frobenius set and the type
 * of the DVR is 1.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "detail/bits.hpp"
#include "errors.hpp"

namespace cdeg {

class NumericalSemigroup {
public:
    /// Build the semigroup generated by `gens`. The list may be redundant;
    /// generators are minimalized eagerly.
    static NumericalSemigroup make(std::vector<std::int64_t> gens) {
        if (gens.empty()) throw empty_generators{};
        for (auto g : gens)
            if (g <= 0) throw nonpositive_generator{g};
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::int64_t d = 0;
        for (auto g : gens) d = std::gcd(d, g);
        if (d != 1) throw gcd_not_one{};

        // Apery set of the multiplicity by shortest path over residues mod e:
        // ap[r] = least element of H congruent to r. Keeps large-conductor
        // families fast; a sieve oracle lives in the tests only.
        const std::int64_t e = gens.front();
        std::vector<std::int64_t> ap(static_cast<std::size_t>(e), -1);
        using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
        std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
        pq.emplace(0, 0);
        while (!pq.empty()) {
            auto [v, r] = pq.top();
            pq.pop();
            if (ap[static_cast<std::size_t>(r)] != -1) continue;
            ap[static_cast<std::size_t>(r)] = v;
            for (auto g : gens) {
                const std::int64_t nv = detail::checked_add(v, g);
                const std::int64_t nr = nv % e;
                if (ap[static_cast<std::size_t>(nr)] == -1) pq.emplace(nv, nr);
            }
        }

        NumericalSemigroup S;
        S.frobenius_ = *std::max_element(ap.begin(), ap.end()) - e;
        S.conductor_ = S.frobenius_ + 1;
        S.membership_ = detail::bitvec(static_cast<int>(S.conductor_) + 1);
        for (std::int64_t x = 0; x <= S.conductor_; ++x)
            if (x >= ap[static_cast<std::size_t>(x % e)])
                S.membership_.set(static_cast<int>(x));
        for (std::int64_t x = 1; x <= S.frobenius_; ++x)
            if (!S.membership_.test(static_cast<int>(x))) S.gaps_.push_back(x);
        S.finish(std::move(gens));
        return S;
    }

    const std::vector<std::int64_t>& generators() const { return generators_; }
    std::int64_t multiplicity() const { return multiplicity_; }
    std::int64_t frobenius() const { return frobenius_; }
    std::int64_t conductor() const { return conductor_; }
    std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
    const std::vector<std::int64_t>& gaps() const { return gaps_; }
    const std::vector<std::int64_t>& pseudo_frobenius() const { return pseudo_frobenius_; }

    /// Cohen-Macaulay type r(R) = |PF(H)|.
    std::int64_t type() const { return static_cast<std::int64_t>(pseudo_frobenius_.size()); }

    /// H = <1>, i.e. the ring is a DVR.
    bool is_trivial() const { return frobenius_ < 0; }

    bool contains(std::int64_t x) const {
        if (x < 0) return false;
        if (x >= conductor_) return true;
        return membership_.test(static_cast<int>(x));
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

private:
    NumericalSemigroup() = default;

    // Derive minimal generators / PF / multiplicity once membership is known.
    // `gens` must generate H (redundancy allowed).
    void finish(std::vector<std::int64_t> gens) {
        // minimal generating set: members of any generating set that are not
        // a sum of two nonzero members
        for (auto g : gens) {
            bool redundant = false;
            for (std::int64_t h = gens.front(); h + gens.front() <= g && !redundant; ++h)
                if (contains(h) && contains(g - h)) redundant = true;
            if (!redundant) generators_.push_back(g);
        }
        multiplicity_ = generators_.front();
        if (is_trivial()) {
            pseudo_frobenius_ = {-1};
            return;
        }
        // x + h in H for every nonzero h in H iff x + g in H for every generator
        for (auto x : gaps_) {
            bool pf = true;
            for (auto g : generators_)
                if (!contains(x + g)) {
                    pf = false;
                    break;
                }
            if (pf) pseudo_frobenius_.push_back(x);
        }
    }

    static NumericalSemigroup from_window(const detail::bitvec& member, std::int64_t frobenius) {
        NumericalSemigroup S;
        S.frobenius_ = frobenius;
        S.conductor_ = frobenius + 1;
        S.membership_ = detail::bitvec(static_cast<int>(S.conductor_) + 1);
        std::int64_t e = 1;
        for (std::int64_t x = 0; x <= frobenius; ++x)
            if (member.test(static_cast<int>(x))) {
                S.membership_.set(static_cast<int>(x));
                if (x > 0 && e == 1) e = x;
            } else {
                S.gaps_.push_back(x);
            }
        S.membership_.set(static_cast<int>(S.conductor_));
        if (!S.gaps_.empty() && e == 1) e = S.conductor_;  // window had no interior member
        if (S.gaps_.empty()) e = 1;
        // every minimal generator lies in [e, max(c+e-1, e)]
        std::vector<std::int64_t> gens;
        for (std::int64_t x = e; x <= std::max(S.conductor_ + e - 1, e); ++x)
            if (S.contains(x)) gens.push_back(x);
        S.finish(std::move(gens));
        return S;
    }

    friend void enumerate_by_genus(std::int64_t,
                                   const std::function<void(const NumericalSemigroup&)>&,
                                   std::int64_t);

    std::vector<std::int64_t> generators_;  // minimal, sorted
    std::int64_t multiplicity_ = 1;
    std::int64_t frobenius_ = -1;
    std::int64_t conductor_ = 0;
    std::vector<std::int64_t> gaps_;
    std::vector<std::int64_t> pseudo_frobenius_;
    detail::bitvec membership_;  // [0, conductor]
};

inline constexpr std::int64_t default_genus_cap = 20;

/// Visit every numerical semigroup of genus <= g_max exactly once, preorder
/// along the standard tree: children of H are H \ {x} for minimal generators
/// x > F(H), in increasing order of x.
inline void enumerate_by_genus(std::int64_t g_max,
                               const std::function<void(const NumericalSemigroup&)>& visit,
                               std::int64_t cap = default_genus_cap) {
    if (g_max < 0 || g_max > cap) throw genus_cap_exceeded(g_max, cap);
    const int bound = static_cast<int>(2 * g_max + 2);  // F <= 2g-1 for genus <= g_max
    detail::bitvec member(bound);
    for (int i = 0; i < bound; ++i) member.set(i);

    // state: membership over [0, bound), current Frobenius number
    std::function<void(std::int64_t, std::int64_t)> dfs = [&](std::int64_t frobenius,
                                                              std::int64_t genus) {
        visit(NumericalSemigroup::from_window(member, frobenius));
        if (genus == g_max) return;
        const std::int64_t c = frobenius + 1;
        std::int64_t e = c + 1;  // multiplicity: least nonzero member
        for (int x = 1; x < bound; ++x)
            if (member.test(x)) {
                e = x;
                break;
            }
        if (e > c) e = std::max<std::int64_t>(c, 1);
        auto in = [&](std::int64_t x) { return x >= c || (x >= 0 && member.test(static_cast<int>(x))); };
        // minimal generators > F all lie in [max(c,1), max(c+e-1, e)]; any such
        // x is the child's Frobenius number, hence x <= 2(genus+1)-1 < bound
        const std::int64_t hi = std::min<std::int64_t>(std::max(c + e - 1, e), bound - 1);
        for (std::int64_t x = std::max<std::int64_t>(c, 1); x <= hi; ++x) {
            bool minimal = true;
            for (std::int64_t h = e; h + e <= x && minimal; ++h)
                if (in(h) && in(x - h)) minimal = false;
            if (!minimal) continue;
            member.set(static_cast<int>(x), false);
            dfs(x, genus + 1);
            member.set(static_cast<int>(x), true);
        }
    };
    dfs(-1, 0);
}

inline std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t g_max,
                                                              std::int64_t cap = default_genus_cap) {
    std::vector<NumericalSemigroup> out;
    enumerate_by_genus(g_max, [&](const NumericalSemigroup& S) { out.push_back(S); }, cap);
    return out;
}

}  // namespace cdeg
