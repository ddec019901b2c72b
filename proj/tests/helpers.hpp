#pragma once

// Shared test utilities: deterministic RNG wrappers and small independent
// oracles kept out of the library on purpose.

#include "tripstern/trip_map.hpp"

#include <random>
#include <set>
#include <vector>

namespace test_helpers {

using namespace tripstern;

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64{seed}; }

inline long rand_in(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline ITriple random_itriple(std::mt19937_64& g, long lo = 1, long hi = 50) {
    return {rand_in(g, lo, hi), rand_in(g, lo, hi), rand_in(g, lo, hi)};
}

inline TripMap random_map(std::mt19937_64& g) {
    auto pick = [&] { return all_perms[static_cast<std::size_t>(rand_in(g, 0, 5))]; };
    return make_trip_map(pick(), pick(), pick());
}

inline Rat random_rat(std::mt19937_64& g, long num_lo, long num_hi, long den_hi) {
    long d = rand_in(g, 1, den_hi);
    long n = rand_in(g, num_lo, num_hi);
    return Rat(n, d);
}

// A rational point strictly inside the triangle: 1 > x > y > 0.
inline RationalPoint random_interior_point(std::mt19937_64& g, long den_hi = 60) {
    for (;;) {
        long d = rand_in(g, 3, den_hi);
        long xn = rand_in(g, 1, d - 1);
        long yn = rand_in(g, 1, d - 1);
        if (yn < xn && xn < d) return {Rat(xn, d), Rat(yn, d)};
    }
}

// Independent tree-expansion oracle for the (e,e,e) membership question:
// expand from (1,1,1) by the two matrix actions, pruning once the entry sum
// exceeds `bound` (sums grow strictly along edges, so this is exhaustive).
inline std::set<ITriple> tree_elements_up_to_sum(long bound) {
    const Mat3& A0 = matrix_A0();
    const Mat3& A1 = matrix_A1();
    std::set<ITriple> seen;
    std::vector<ITriple> stack{{1, 1, 1}};
    while (!stack.empty()) {
        ITriple t = stack.back();
        stack.pop_back();
        if (t.sum() > bound) continue;
        seen.insert(t);
        stack.push_back(row_apply(t, A0));
        stack.push_back(row_apply(t, A1));
    }
    return seen;
}

}  // namespace test_helpers
