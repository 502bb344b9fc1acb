#pragma once

/**
 * @file bits.hpp
 * @brief Fixed-length bit vector used for membership windows.
 *
 * Windows are short (a conductor's worth of bits), so everything is a
 * vector of 64-bit words with the unused tail of the last word kept zero.
 * That invariant makes equality, hashing and lexicographic comparison
 * plain word comparisons.
 */

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "../errors.hpp"

namespace cdeg::detail {

class bitvec {
public:
    bitvec() = default;
    explicit bitvec(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) { assert(nbits >= 0); }

    int size() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
    }

    void set(int i, bool v = true) {
        assert(i >= 0 && i < n_);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v)
            w_[static_cast<std::size_t>(i) / 64] |= mask;
        else
            w_[static_cast<std::size_t>(i) / 64] &= ~mask;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool all() const { return count() == n_; }

    /// this |= (src << k), bits shifted past size() are dropped.
    void or_with_shifted(const bitvec& src, int k) {
        assert(k >= 0);
        const int off = k / 64;
        const int sh = k % 64;
        const int nw = static_cast<int>(w_.size());
        for (int j = 0; j < static_cast<int>(src.w_.size()); ++j) {
            const std::uint64_t v = src.w_[static_cast<std::size_t>(j)];
            if (v == 0) continue;
            if (j + off < nw) w_[static_cast<std::size_t>(j + off)] |= v << sh;
            if (sh != 0 && j + off + 1 < nw)
                w_[static_cast<std::size_t>(j + off + 1)] |= v >> (64 - sh);
        }
        trim();
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (int j = 0; j < static_cast<int>(w_.size()); ++j) {
            std::uint64_t v = w_[static_cast<std::size_t>(j)];
            while (v != 0) {
                const int b = std::countr_zero(v);
                f(j * 64 + b);
                v &= v - 1;
            }
        }
    }

    /// True when pred holds for every set bit (stops at the first failure).
    template <class F>
    bool all_of_set(F&& pred) const {
        for (int j = 0; j < static_cast<int>(w_.size()); ++j) {
            std::uint64_t v = w_[static_cast<std::size_t>(j)];
            while (v != 0) {
                const int b = std::countr_zero(v);
                if (!pred(j * 64 + b)) return false;
                v &= v - 1;
            }
        }
        return true;
    }

    /// Index of the highest zero bit, or -1 when the window is all ones.
    int highest_unset() const {
        for (int i = n_ - 1; i >= 0; --i)
            if (!test(i)) return i;
        return -1;
    }

    std::string to_string01() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for_each_set([&](int i) { s[static_cast<std::size_t>(i)] = '1'; });
        return s;
    }

    friend bool operator==(const bitvec&, const bitvec&) = default;

    /// Lexicographic order on the 0/1 sequence (bit 0 first).
    friend bool lex_less(const bitvec& a, const bitvec& b) {
        assert(a.n_ == b.n_);
        for (int i = 0; i < a.n_; ++i) {
            const bool x = a.test(i), y = b.test(i);
            if (x != y) return y;  // '0' < '1'
        }
        return false;
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow{};
    return r;
}

}  // namespace cdeg::detail
