#pragma once

// Which integer triples occur in the unpermuted TRIP-Stern tree.  The
// potential-entry set is P = {0 < a <= b < c} together with (1,1,1); the
// partial inverse map G walks any element of P down to the unique germ whose
// tree contains it, and an element lies in the tree of (1,1,1) exactly when
// that germ is (1,1,1).

#include "tripstern/stern.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tripstern {

inline bool in_P(const ITriple& t) {
    if (t.a == 1 && t.b == 1 && t.c == 1) return true;
    return t.a > 0 && t.a <= t.b && t.b < t.c;
}

// The inverse map G: acts as A1^-1 when a+b < c and as A0^-1 when a+b >= c
// and (a < b or a = 1 = c-b).  Undefined exactly on the points that root
// their own tree; these are the germs.
inline std::optional<ITriple> inverse_step(const ITriple& t) {
    if (!in_P(t)) throw std::invalid_argument("inverse_step needs an element of P, got " + to_string(t));
    if (t.a + t.b < t.c) return ITriple{t.a, t.b, t.c - t.a};
    if (t.a < t.b || (t.a == 1 && t.c - t.b == 1)) return ITriple{t.c - t.b, t.a, t.b};
    return std::nullopt;
}

// Germ predicate: a point of P on which G is undefined, i.e. (a,a,c) with
// c <= 2a, except (1,1,2).  The published form reads c < 2a; the family
// (a,a,2a) with a >= 2 also roots its own tree (both unimodular preimages
// leave P) and is included here so that germ/G-case-1/G-case-2 partition P.
inline bool is_germ(const ITriple& t) { return in_P(t) && !inverse_step(t).has_value(); }

// Iterate G until it is undefined; the last defined value is the germ.  Each
// step strictly decreases a+b+c, so this terminates.
inline ITriple germ_of(const ITriple& t) {
    if (!in_P(t)) throw std::invalid_argument("germ_of needs an element of P, got " + to_string(t));
    ITriple cur = t;
    for (;;) {
        auto next = inverse_step(cur);
        if (!next) return cur;
        cur = *next;
    }
}

// Membership in the TRIP-Stern set: the tree of a germ contains exactly the
// points G walks back to it, so t occurs in the (1,1,1)-tree iff its germ is
// (1,1,1).  Runs in O(a+b+c) with no tree storage.
inline bool in_S(const ITriple& t) { return in_P(t) && germ_of(t) == ITriple{1, 1, 1}; }

// All forbidden triples (elements of P outside the tree) with entry sum at
// most `bound`, sorted lexicographically.
inline std::vector<ITriple> enumerate_forbidden(long bound) {
    if (bound < 3) throw std::invalid_argument("enumerate_forbidden needs bound >= 3");
    std::vector<ITriple> out;
    for (long a = 1; 3 * a + 1 <= bound + 1; ++a)
        for (long b = a; a + 2 * b + 1 <= bound + 1; ++b)
            for (long c = b + 1; a + b + c <= bound; ++c) {
                ITriple t{a, b, c};
                if (!in_S(t)) out.push_back(t);
            }
    // (1,1,1) is in S; no other sum<=3 candidates exist
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// multiplicity census

struct CensusReport {
    int depth = 0;
    std::map<ITriple, unsigned long long> counts;
    bool seed_once = true;        // (1,1,1) occurs exactly once
    bool others_twice = true;     // every other triple occurs exactly twice
    bool order_preserved = true;  // every non-seed node satisfies 0 < a <= b < c
};

// Counts every triple in the (e,e,e) tree truncated at `depth`.  The left
// and right subtrees are identical, so both occurrences of a triple sit on
// the same level and the truncated tree never cuts a pair in half.
inline CensusReport multiplicity_census(int depth, int depth_cap = 25) {
    if (depth < 1 || depth > depth_cap)
        throw std::invalid_argument("multiplicity_census depth out of range");
    CensusReport rep;
    rep.depth = depth;
    const TripMap map = make_trip_map(Perm::e, Perm::e, Perm::e);
    walk_tree<Int>(map, depth, {1, 1, 1}, [&](int lvl, unsigned long long, const ITriple& t) {
        ++rep.counts[t];
        if (lvl > 1 && !(t.a > 0 && t.a <= t.b && t.b < t.c)) rep.order_preserved = false;
    });
    const ITriple seed{1, 1, 1};
    for (const auto& [t, n] : rep.counts) {
        if (t == seed) {
            if (n != 1) rep.seed_once = false;
        } else if (n != 2) {
            rep.others_twice = false;
        }
    }
    return rep;
}

}  // namespace tripstern
