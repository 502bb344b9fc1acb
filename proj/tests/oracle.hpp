#pragma once

// Independent brute-force oracles for the test suite. Everything here is
// deliberately naive and shares no code with the library implementation:
// sieve membership, explicit std::set arithmetic with generous truncation,
// exhaustive gap-subset enumeration. Used to freeze expected values and to
// cross-check the windowed implementation on small corpora.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

// members of <gens> in [0, bound) by plain sieve
inline std::vector<bool> sieve(const std::vector<i64>& gens, i64 bound) {
    std::vector<bool> mem(static_cast<std::size_t>(bound), false);
    mem[0] = true;
    for (i64 x = 0; x < bound; ++x)
        if (mem[static_cast<std::size_t>(x)])
            for (i64 g : gens)
                if (x + g < bound) mem[static_cast<std::size_t>(x + g)] = true;
    return mem;
}

struct SieveSemigroup {
    std::vector<bool> mem;
    i64 bound = 0;
    i64 frobenius = -1;
    std::vector<i64> gaps;

    explicit SieveSemigroup(const std::vector<i64>& gens) {
        i64 mx = *std::max_element(gens.begin(), gens.end());
        bound = mx * mx + 4 * mx + 8;
        mem = sieve(gens, bound);
        for (i64 x = 1; x < bound; ++x)
            if (!mem[static_cast<std::size_t>(x)]) gaps.push_back(x);
        if (!gaps.empty()) frobenius = gaps.back();
    }

    bool contains(i64 x) const {
        if (x < 0) return false;
        if (x >= bound) return true;
        return mem[static_cast<std::size_t>(x)];
    }
};

// A relative ideal as an explicit element set on [min, min+span); everything
// past the span is implied. span is chosen large enough that windowed
// comparisons against the implementation are exact.
struct NaiveIdeal {
    std::set<i64> elems;
    i64 hi = 0;  // exclusive truncation bound

    i64 lo() const { return *elems.begin(); }
    bool contains(i64 x) const { return x >= hi ? true : elems.count(x) > 0; }
};

inline NaiveIdeal naive_from_gens(const SieveSemigroup& S, const std::vector<i64>& gens,
                                  i64 span) {
    NaiveIdeal E;
    const i64 m = *std::min_element(gens.begin(), gens.end());
    E.hi = m + span;
    for (i64 g : gens)
        for (i64 x = g; x < E.hi; ++x)
            if (S.contains(x - g)) E.elems.insert(x);
    return E;
}

inline NaiveIdeal naive_product(const SieveSemigroup& S, const NaiveIdeal& a,
                                const NaiveIdeal& b) {
    NaiveIdeal r;
    r.hi = std::min(a.hi - a.lo(), b.hi - b.lo()) + a.lo() + b.lo();
    for (i64 x : a.elems)
        for (i64 y : b.elems)
            if (x + y < r.hi) r.elems.insert(x + y);
    for (i64 x = a.lo() + b.lo() + S.frobenius + 1; x < r.hi; ++x) r.elems.insert(x);
    return r;
}

inline NaiveIdeal naive_colon(const SieveSemigroup& S, const NaiveIdeal& a,
                              const NaiveIdeal& b) {
    NaiveIdeal r;
    const i64 F = S.frobenius;
    const i64 scan_lo = a.lo() - b.lo() - F - 2;
    const i64 scan_hi = a.lo() - b.lo() + F + 2;  // everything above qualifies
    r.hi = scan_hi + 2 * (F + 2);
    for (i64 x = scan_lo; x < r.hi; ++x) {
        if (x > scan_hi) {
            r.elems.insert(x);
            continue;
        }
        bool ok = true;
        for (i64 y = b.lo(); y < b.lo() + 3 * (F + 2) && ok; ++y)
            if (b.contains(y) && !a.contains(x + y)) ok = false;
        if (ok) r.elems.insert(x);
    }
    return r;
}

// window of an ideal: the elements in [lo, lo+F] — enough to pin the set
inline std::vector<i64> naive_window(const SieveSemigroup& S, const NaiveIdeal& E) {
    std::vector<i64> w;
    for (i64 x = E.lo(); x <= E.lo() + std::max<i64>(S.frobenius, 0); ++x)
        if (E.contains(x)) w.push_back(x - E.lo());
    return w;
}

// All numerical-semigroup gap sets with |G| = genus, as bitmask-free sorted
// vectors; enumerated by choosing the Frobenius number and a gap subset,
// then checking closure of the complement by sieve. Independent of the tree.
inline std::vector<std::vector<i64>> gapsets_of_genus(i64 genus) {
    std::vector<std::vector<i64>> out;
    if (genus == 0) {
        out.push_back({});
        return out;
    }
    for (i64 F = 1; F <= 2 * genus - 1; ++F) {
        std::vector<i64> rest;
        for (i64 x = 1; x < F; ++x) rest.push_back(x);
        if (static_cast<i64>(rest.size()) < genus - 1) continue;
        std::vector<bool> pick(rest.size(), false);
        std::fill(pick.end() - (genus - 1), pick.end(), true);
        do {
            std::vector<i64> gaps;
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (pick[i]) gaps.push_back(rest[i]);
            gaps.push_back(F);
            const i64 hi = 2 * F + 4;
            std::vector<bool> mem(static_cast<std::size_t>(hi), true);
            for (i64 g : gaps) mem[static_cast<std::size_t>(g)] = false;
            bool closed = true;
            for (i64 x = 1; x < hi && closed; ++x)
                for (i64 y = x; x + y < hi && closed; ++y)
                    if (mem[static_cast<std::size_t>(x)] && mem[static_cast<std::size_t>(y)] &&
                        !mem[static_cast<std::size_t>(x + y)])
                        closed = false;
            if (closed) out.push_back(gaps);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return out;
}

}  // namespace oracle
