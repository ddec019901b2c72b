#pragma once

// TRIP-Stern sequences: the tree a_1 = seed, a_2n = a_n*F0, a_2n+1 = a_n*F1,
// its levels, the binary-word addressing, and the generating-function route
// to the same levels.  Also the classical Stern diatomic sequence and the
// Stern-Brocot array they generalize.

#include "tripstern/trip_map.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tripstern {

inline constexpr int default_level_cap = 30;

// Flat index m >= 1  <->  word of the bits of m after the leading one.
inline BinaryWord word_for_index(unsigned long long m) {
    if (m == 0) throw std::invalid_argument("flat indices start at 1");
    BinaryWord w;
    int top = 63;
    while (top > 0 && !((m >> top) & 1ULL)) --top;
    for (int i = top - 1; i >= 0; --i) w.push_back(static_cast<unsigned char>((m >> i) & 1ULL));
    return w;
}

inline unsigned long long index_for_word(const BinaryWord& w) {
    if (w.size() >= 63) throw std::invalid_argument("word too long for a 64-bit flat index");
    unsigned long long m = 1;
    for (auto b : w) m = 2 * m + (b ? 1ULL : 0ULL);
    return m;
}

// seed * F_{i1} * ... * F_{in}; the empty word returns the seed.
template <typename T>
Triple<T> triangle_word(const TripMap& map, const BinaryWord& word, const Triple<T>& seed) {
    Triple<T> t = seed;
    for (auto b : word) t = row_apply(t, b ? map.F1 : map.F0);
    return t;
}

// The m-th term of the (generalized) TRIP-Stern sequence, m >= 1.
template <typename T>
Triple<T> trip_stern_term(const TripMap& map, unsigned long long m, const Triple<T>& seed) {
    return triangle_word(map, word_for_index(m), seed);
}

// Level n (n >= 1): the 2^(n-1) terms with 2^(n-1) <= m < 2^n, in index order.
template <typename T>
std::vector<Triple<T>> level(const TripMap& map, int n, const Triple<T>& seed,
                             int depth_cap = default_level_cap) {
    if (n < 1) throw std::invalid_argument("levels start at 1");
    if (n > depth_cap)
        throw std::invalid_argument("level " + std::to_string(n) + " exceeds depth cap " +
                                    std::to_string(depth_cap));
    std::vector<Triple<T>> cur{seed};
    for (int d = 1; d < n; ++d) {
        std::vector<Triple<T>> next;
        next.reserve(cur.size() * 2);
        for (const auto& t : cur) {
            next.push_back(row_apply(t, map.F0));
            next.push_back(row_apply(t, map.F1));
        }
        cur = std::move(next);
    }
    return cur;
}

// Level n of the tree through the generating function P(x) = F0 + F1 x over
// a commuting indeterminate: the product of the factors P(x^(2^j)),
// j = 0..n-1, has 2^n matrix coefficients B_k; the level is the multiset
// {(1,1,1) B_k}.  Matches the recursive level n+1 only as a multiset: the
// factor order enumerates words by ascending bit-reversed index.
inline std::vector<ITriple> level_via_generating_function(const TripMap& map, int n,
                                                          int depth_cap = default_level_cap) {
    if (n < 1) throw std::invalid_argument("levels start at 1");
    if (n > depth_cap)
        throw std::invalid_argument("level " + std::to_string(n) + " exceeds depth cap " +
                                    std::to_string(depth_cap));
    std::vector<Mat3> coeff{Mat3::identity()};
    for (int j = 0; j < n; ++j) {
        std::vector<Mat3> next(coeff.size() * 2);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k] = coeff[k] * map.F0;
            next[k + coeff.size()] = coeff[k] * map.F1;
        }
        coeff = std::move(next);
    }
    std::vector<ITriple> out;
    out.reserve(coeff.size());
    const ITriple ones{1, 1, 1};
    for (const auto& B : coeff) out.push_back(row_apply(ones, B));
    return out;
}

// Depth-first sweep over the tree down to `depth` levels, visiting every
// node once as visit(level, offset_within_level, triple).  Children are
// visited F0-child first, so offsets run in flat-index order.  Uses a
// per-depth scratch stack; memory is O(depth) regardless of width.
template <typename T, typename Visit>
void walk_tree(const TripMap& map, int depth, const Triple<T>& seed, Visit&& visit) {
    if (depth < 1) return;
    auto act0 = RowAction::from(map.F0);
    auto act1 = RowAction::from(map.F1);
    std::vector<Triple<T>> stack(static_cast<std::size_t>(depth));
    stack[0] = seed;
    auto step = [&](const Triple<T>& in, Triple<T>& out, bool right) {
        if (right) {
            if (act1) act1->apply(in, out);
            else out = row_apply(in, map.F1);
        } else {
            if (act0) act0->apply(in, out);
            else out = row_apply(in, map.F0);
        }
    };
    auto rec = [&](auto&& self, int d, unsigned long long offset) -> void {
        visit(d + 1, offset, stack[static_cast<std::size_t>(d)]);
        if (d + 1 == depth) return;
        step(stack[static_cast<std::size_t>(d)], stack[static_cast<std::size_t>(d + 1)], false);
        self(self, d + 1, 2 * offset);
        step(stack[static_cast<std::size_t>(d)], stack[static_cast<std::size_t>(d + 1)], true);
        self(self, d + 1, 2 * offset + 1);
    };
    rec(rec, 0, 0);
}

// ---------------------------------------------------------------------------
// classical one-dimensional sequences

// Stern's diatomic sequence: a(1) = 1, a(2n) = a(n), a(2n+1) = a(n) + a(n+1).
inline Int stern_diatomic(unsigned long long n) {
    if (n == 0) throw std::invalid_argument("stern_diatomic is defined for n >= 1");
    // track (a(t), a(t+1)) while consuming the bits of n after the leading one
    Int p = 1, q = 1;
    int top = 63;
    while (top > 0 && !((n >> top) & 1ULL)) --top;
    for (int i = top - 1; i >= 0; --i) {
        if ((n >> i) & 1ULL)
            p += q;   // (p+q, q)
        else
            q += p;   // (p, p+q)
    }
    return p;
}

struct Fraction {
    Int num, den;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Level n of the Stern-Brocot array on [0,1]: level 0 is 0/1, 1/1 and each
// level inserts the mediant between consecutive entries.  Mediants of
// neighbours are already in lowest terms, so no reduction is performed.
inline std::vector<Fraction> stern_brocot_level(int n, int depth_cap = default_level_cap) {
    if (n < 0) throw std::invalid_argument("stern_brocot_level needs n >= 0");
    if (n > depth_cap)
        throw std::invalid_argument("level " + std::to_string(n) + " exceeds depth cap " +
                                    std::to_string(depth_cap));
    std::vector<Fraction> cur{{0, 1}, {1, 1}};
    for (int d = 0; d < n; ++d) {
        std::vector<Fraction> next;
        next.reserve(cur.size() * 2 - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            next.push_back(cur[i]);
            next.push_back({cur[i].num + cur[i + 1].num, cur[i].den + cur[i + 1].den});
        }
        next.push_back(cur.back());
        cur = std::move(next);
    }
    return cur;
}

}  // namespace tripstern
