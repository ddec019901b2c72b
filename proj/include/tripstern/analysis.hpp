#pragma once

// Level statistics for TRIP-Stern trees: maxima and minima with their
// positions, the three path theorems, level sums computed along two
// independent routes, growth-rate estimates, conjugation, and the
// generalized-seed path theorems.

#include "tripstern/stern.hpp"
#include "tripstern/tables.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tripstern {

inline constexpr int default_exhaustive_cap = 25;
inline constexpr int default_path_cap = 60;

namespace detail {
inline void check_depth(int depth, int cap, const char* what) {
    if (depth < 1) throw std::invalid_argument(std::string(what) + ": depth must be >= 1");
    if (depth > cap)
        throw std::invalid_argument(std::string(what) + ": depth " + std::to_string(depth) +
                                    " exceeds cap " + std::to_string(cap));
}

template <typename T>
const T& max3(const Triple<T>& t) {
    return std::max(t.a, std::max(t.b, t.c));
}

template <typename T>
const T& min3(const Triple<T>& t) {
    return std::min(t.a, std::min(t.b, t.c));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// exhaustive level statistics

// Position of an extreme value: offset of the triple within its level
// (0-based, flat index minus 2^(level-1)) and the component index 0..2.
using Position = std::pair<unsigned long long, int>;

template <typename T>
struct LevelStats {
    int depth = 0;
    T max_value{};
    std::vector<Position> max_positions;
    T min_value{};
    std::vector<Position> min_positions;
    T s1{}, s2{}, s3{};
    T total() const { return s1 + s2 + s3; }
};

// One exhaustive sweep; returns stats for every level 1..depth.  Position
// lists are complete (ties are not collapsed) unless with_positions is off.
template <typename T>
std::vector<LevelStats<T>> scan_levels(const TripMap& map, int depth, const Triple<T>& seed,
                                       bool with_positions = true,
                                       int depth_cap = default_exhaustive_cap) {
    detail::check_depth(depth, depth_cap, "scan_levels");
    std::vector<LevelStats<T>> out(static_cast<std::size_t>(depth));
    for (int d = 0; d < depth; ++d) out[static_cast<std::size_t>(d)].depth = d + 1;
    walk_tree(map, depth, seed, [&](int lvl, unsigned long long offset, const Triple<T>& t) {
        auto& st = out[static_cast<std::size_t>(lvl - 1)];
        bool first = offset == 0;
        for (int j = 0; j < 3; ++j) {
            const T& v = t[j];
            if (first && j == 0) {
                st.max_value = v;
                st.min_value = v;
                if (with_positions) {
                    st.max_positions.assign(1, {offset, 0});
                    st.min_positions.assign(1, {offset, 0});
                }
                continue;
            }
            if (v > st.max_value) {
                st.max_value = v;
                if (with_positions) st.max_positions.assign(1, {offset, j});
            } else if (with_positions && v == st.max_value) {
                st.max_positions.emplace_back(offset, j);
            }
            if (v < st.min_value) {
                st.min_value = v;
                if (with_positions) st.min_positions.assign(1, {offset, j});
            } else if (with_positions && v == st.min_value) {
                st.min_positions.emplace_back(offset, j);
            }
        }
        st.s1 += t.a;
        st.s2 += t.b;
        st.s3 += t.c;
    });
    return out;
}

template <typename T>
LevelStats<T> level_stats(const TripMap& map, int n, const Triple<T>& seed,
                          int depth_cap = default_exhaustive_cap) {
    auto all = scan_levels(map, n, seed, true, depth_cap);
    return std::move(all.back());
}

// Maximum entries per level, seed level first.
template <typename T>
std::vector<T> maxima_sequence(const TripMap& map, int depth, const Triple<T>& seed,
                               int depth_cap = default_exhaustive_cap) {
    auto all = scan_levels(map, depth, seed, false, depth_cap);
    std::vector<T> out;
    out.reserve(all.size());
    for (auto& st : all) out.push_back(std::move(st.max_value));
    return out;
}

inline std::vector<Int> maxima_sequence(const TripMap& map, int depth,
                                        int depth_cap = default_exhaustive_cap) {
    return maxima_sequence<Int>(map, depth, {1, 1, 1}, depth_cap);
}

// ---------------------------------------------------------------------------
// path walks

enum class PathPolicy { always_left, always_right, alternate_left_first };

inline std::optional<PathPolicy> parse_policy(std::string_view s) {
    if (s == "left") return PathPolicy::always_left;
    if (s == "right") return PathPolicy::always_right;
    if (s == "alt" || s == "alternate") return PathPolicy::alternate_left_first;
    return std::nullopt;
}

// Triples on the policy path, levels 1..depth.  Linear in depth.
template <typename T>
std::vector<Triple<T>> policy_path(const TripMap& map, PathPolicy policy, int depth,
                                   const Triple<T>& seed, int depth_cap = default_path_cap) {
    detail::check_depth(depth, depth_cap, "policy_path");
    std::vector<Triple<T>> out;
    out.reserve(static_cast<std::size_t>(depth));
    out.push_back(seed);
    for (int d = 1; d < depth; ++d) {
        bool right;
        switch (policy) {
            case PathPolicy::always_left: right = false; break;
            case PathPolicy::always_right: right = true; break;
            case PathPolicy::alternate_left_first: right = (d % 2 == 0); break;
            default: throw std::logic_error("bad policy");
        }
        out.push_back(row_apply(out.back(), right ? map.F1 : map.F0));
    }
    return out;
}

// True at level n iff the triple on the policy path attains the level max.
template <typename T>
std::vector<bool> verify_max_path(const TripMap& map, PathPolicy policy, int depth,
                                  const Triple<T>& seed, int depth_cap = default_exhaustive_cap) {
    auto stats = scan_levels(map, depth, seed, false, depth_cap);
    auto path = policy_path(map, policy, depth, seed, depth_cap);
    std::vector<bool> ok(static_cast<std::size_t>(depth));
    for (int d = 0; d < depth; ++d)
        ok[static_cast<std::size_t>(d)] =
            detail::max3(path[static_cast<std::size_t>(d)]) == stats[static_cast<std::size_t>(d)].max_value;
    return ok;
}

inline std::vector<bool> verify_max_path(const TripMap& map, PathPolicy policy, int depth,
                                         int depth_cap = default_exhaustive_cap) {
    return verify_max_path<Int>(map, policy, depth, {1, 1, 1}, depth_cap);
}

enum class MinSide { left, right, both };

template <typename T>
struct MinPathReport {
    std::vector<bool> ok;        // per level: stated path(s) attain the level min
    std::vector<T> min_values;   // per level
    bool all_ok() const {
        for (bool b : ok)
            if (!b) return false;
        return true;
    }
};

template <typename T>
MinPathReport<T> verify_min_path(const TripMap& map, MinSide side, int depth,
                                 const Triple<T>& seed, int depth_cap = default_exhaustive_cap) {
    auto stats = scan_levels(map, depth, seed, false, depth_cap);
    auto left = policy_path(map, PathPolicy::always_left, depth, seed, depth_cap);
    auto right = policy_path(map, PathPolicy::always_right, depth, seed, depth_cap);
    MinPathReport<T> rep;
    rep.ok.resize(static_cast<std::size_t>(depth));
    rep.min_values.reserve(static_cast<std::size_t>(depth));
    for (int d = 0; d < depth; ++d) {
        const T& mn = stats[static_cast<std::size_t>(d)].min_value;
        bool l = detail::min3(left[static_cast<std::size_t>(d)]) == mn;
        bool r = detail::min3(right[static_cast<std::size_t>(d)]) == mn;
        bool good;
        switch (side) {
            case MinSide::left: good = l; break;
            case MinSide::right: good = r; break;
            case MinSide::both: good = l && r; break;
            default: throw std::logic_error("bad side");
        }
        rep.ok[static_cast<std::size_t>(d)] = good;
        rep.min_values.push_back(mn);
    }
    return rep;
}

inline MinPathReport<Int> verify_min_path(const TripMap& map, MinSide side, int depth,
                                          int depth_cap = default_exhaustive_cap) {
    return verify_min_path<Int>(map, side, depth, {1, 1, 1}, depth_cap);
}

// ---------------------------------------------------------------------------
// level sums, computed along two independent routes

template <typename T>
struct LevelSums {
    T s1{}, s2{}, s3{};
    T total() const { return s1 + s2 + s3; }

    friend bool operator==(const LevelSums& x, const LevelSums& y) {
        return x.s1 == y.s1 && x.s2 == y.s2 && x.s3 == y.s3;
    }
};

// Route 1: sum every triple of every level during one sweep.
template <typename T>
std::vector<LevelSums<T>> direct_level_sums(const TripMap& map, int depth, const Triple<T>& seed,
                                            int depth_cap = default_exhaustive_cap) {
    detail::check_depth(depth, depth_cap, "direct_level_sums");
    std::vector<LevelSums<T>> out(static_cast<std::size_t>(depth));
    walk_tree(map, depth, seed, [&](int lvl, unsigned long long, const Triple<T>& t) {
        auto& s = out[static_cast<std::size_t>(lvl - 1)];
        s.s1 += t.a;
        s.s2 += t.b;
        s.s3 += t.c;
    });
    return out;
}

// Route 2: the component sums evolve as a row vector under (F0 + F1).
template <typename T>
std::vector<LevelSums<T>> recurrence_level_sums(const TripMap& map, int depth,
                                                const Triple<T>& seed) {
    if (depth < 1) throw std::invalid_argument("recurrence_level_sums: depth must be >= 1");
    const Mat3 M = mat_add(map.F0, map.F1);
    std::vector<LevelSums<T>> out;
    out.reserve(static_cast<std::size_t>(depth));
    Triple<T> v = seed;
    out.push_back({v.a, v.b, v.c});
    for (int d = 1; d < depth; ++d) {
        v = row_apply(v, M);
        out.push_back({v.a, v.b, v.c});
    }
    return out;
}

// Both routes, compared level by level; a mismatch is an invariant violation.
template <typename T>
std::vector<LevelSums<T>> level_sums_sequence(const TripMap& map, int depth, const Triple<T>& seed,
                                              int depth_cap = default_exhaustive_cap) {
    auto direct = direct_level_sums(map, depth, seed, depth_cap);
    auto rec = recurrence_level_sums(map, depth, seed);
    for (int d = 0; d < depth; ++d)
        if (!(direct[static_cast<std::size_t>(d)] == rec[static_cast<std::size_t>(d)]))
            throw std::runtime_error("level-sum routes disagree for map " + map.name() +
                                     " at level " + std::to_string(d + 1));
    return direct;
}

template <typename T>
LevelSums<T> level_sums(const TripMap& map, int n, const Triple<T>& seed,
                        int depth_cap = default_exhaustive_cap) {
    return level_sums_sequence(map, n, seed, depth_cap).back();
}

// Total sums S(1..depth) by the recurrence route alone (linear in depth; the
// two routes are checked for agreement at exhaustive depths elsewhere).
inline std::vector<Int> total_sums(const TripMap& map, int depth, const ITriple& seed = {1, 1, 1}) {
    auto rec = recurrence_level_sums<Int>(map, depth, seed);
    std::vector<Int> out;
    out.reserve(rec.size());
    for (auto& s : rec) out.push_back(s.total());
    return out;
}

// ---------------------------------------------------------------------------
// growth rates

struct RatioEstimate {
    double s_ratio;        // S(depth)/S(depth-1)
    double s2_over_s1;     // at depth
    double s3_over_s2;
    double dominant_eigenvalue;  // power-iteration estimate for F0+F1
};

// Exact-integer power iteration; only the final ratios are floats.
inline RatioEstimate sum_ratio_estimate(const TripMap& map, int depth) {
    if (depth < 4) throw std::invalid_argument("sum_ratio_estimate needs depth >= 4");
    auto sums = recurrence_level_sums<Int>(map, depth, {1, 1, 1});
    const auto& last = sums.back();
    const auto& prev = sums[sums.size() - 2];
    RatioEstimate r{};
    r.s_ratio = to_double(Rat(last.total(), prev.total()));
    r.s2_over_s1 = to_double(Rat(last.s2, last.s1));
    r.s3_over_s2 = to_double(Rat(last.s3, last.s2));
    // Rayleigh quotient of the last two exact iterates
    Int dot = last.s1 * prev.s1 + last.s2 * prev.s2 + last.s3 * prev.s3;
    Int nrm = prev.s1 * prev.s1 + prev.s2 * prev.s2 + prev.s3 * prev.s3;
    r.dominant_eigenvalue = to_double(Rat(dot, nrm));
    return r;
}

// ---------------------------------------------------------------------------
// conjugation

// (sigma, tau0, tau1) -> (kappa sigma, tau0 kappa^-1, tau1 kappa^-1): the
// node triples pick up only a right factor kappa^-1, so per-level maxima,
// minima and total sums are unchanged.
inline TripMap conjugate_map(const TripMap& map, Perm kappa) {
    Perm ki = inverse(kappa);
    return make_trip_map(compose(kappa, map.sigma), compose(map.tau0, ki), compose(map.tau1, ki));
}

// ---------------------------------------------------------------------------
// generalized seeds

template <typename T>
struct GeneralizedClause {
    std::string kind;            // "maxima" or "minima"
    PathPolicy policy{};
    std::optional<T> claimed_min;  // minima clauses: the persisting value
    std::vector<bool> ok;
    bool passed = true;
};

template <typename T>
struct GeneralizedPathReport {
    std::vector<GeneralizedClause<T>> clauses;
    bool passed = true;
};

namespace detail {

template <typename T>
Triple<T> permute_seed(const Triple<T>& s, Perm kappa) {
    Mat3 K = perm_matrix(kappa);
    return row_apply(s, K);
}

inline bool name_in(const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
}

}  // namespace detail

// Checks every theorem clause that covers `map` whose seed-order condition
// holds.  The conditions are stated for identity-sigma maps; for a general
// map they apply to the seed permuted by kappa = sigma.  Throws when no
// clause covers the map, or when the seed violates every applicable
// condition.
template <typename T>
GeneralizedPathReport<T> verify_generalized_paths(const TripMap& map, const Triple<T>& seed,
                                                  int depth,
                                                  int depth_cap = default_exhaustive_cap) {
    detail::check_depth(depth, depth_cap, "verify_generalized_paths");
    const std::string base = identity_sigma_name(map.sigma, map.tau0, map.tau1);
    const Triple<T> eff = detail::permute_seed(seed, map.sigma);

    bool any_clause = false;
    std::vector<std::string> unmet;
    GeneralizedPathReport<T> report;

    auto stats = scan_levels(map, depth, seed, false, depth_cap);
    auto check_max = [&](PathPolicy policy) {
        GeneralizedClause<T> cl;
        cl.kind = "maxima";
        cl.policy = policy;
        auto path = policy_path(map, policy, depth, seed, depth_cap);
        for (int d = 0; d < depth; ++d) {
            bool good = detail::max3(path[static_cast<std::size_t>(d)]) ==
                        stats[static_cast<std::size_t>(d)].max_value;
            cl.ok.push_back(good);
            cl.passed = cl.passed && good;
        }
        report.passed = report.passed && cl.passed;
        report.clauses.push_back(std::move(cl));
    };

    if (detail::name_in(generalized_max_right_maps(), base)) {
        any_clause = true;
        if (eff.a >= eff.b && eff.b >= eff.c && eff.c > T(0))
            check_max(PathPolicy::always_right);
        else
            unmet.push_back("maxima on the right path require a >= b >= c > 0 (after sigma)");
    }
    if (detail::name_in(generalized_max_left_maps(), base)) {
        any_clause = true;
        if (T(0) < eff.a && eff.a <= eff.b && eff.b <= eff.c)
            check_max(PathPolicy::always_left);
        else
            unmet.push_back("maxima on the left path require 0 < a <= b <= c (after sigma)");
    }

    for (const auto& row : generalized_min_clauses()) {
        if (!detail::name_in(row.maps, base)) continue;
        any_clause = true;
        // the strictly smallest effective-seed component must sit in one of
        // the row's candidate slots
        int slot = -1;
        for (int v : row.candidate_slots) {
            bool strict_min = true;
            for (int j = 0; j < 3; ++j)
                if (j != v && !(eff[v] < eff[j])) strict_min = false;
            if (strict_min) {
                slot = v;
                break;
            }
        }
        if (slot < 0) {
            unmet.push_back("minima clause needs a strictly smallest seed component in a stated slot");
            continue;
        }
        GeneralizedClause<T> cl;
        cl.kind = "minima";
        cl.policy = row.left_path ? PathPolicy::always_left : PathPolicy::always_right;
        cl.claimed_min = eff[slot];
        auto path = policy_path(map, cl.policy, depth, seed, depth_cap);
        for (int d = 0; d < depth; ++d) {
            bool good = stats[static_cast<std::size_t>(d)].min_value == *cl.claimed_min &&
                        detail::min3(path[static_cast<std::size_t>(d)]) == *cl.claimed_min;
            cl.ok.push_back(good);
            cl.passed = cl.passed && good;
        }
        report.passed = report.passed && cl.passed;
        report.clauses.push_back(std::move(cl));
    }

    if (!any_clause)
        throw std::invalid_argument("no generalized path theorem covers map " + map.name());
    if (report.clauses.empty())
        throw std::invalid_argument("seed violates every applicable condition for map " +
                                    map.name() + ": " + unmet.front());
    return report;
}

}  // namespace tripstern
