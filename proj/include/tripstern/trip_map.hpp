#pragma once

// The 216-member family of triangle partition (TRIP) maps.  A map is a
// permutation triplet (sigma, tau0, tau1) with cached matrices
// F0 = sigma*A0*tau0 and F1 = sigma*A1*tau1, acting on triples from the
// right.  Also the classical one-dimensional baseline: the Gauss map and
// the binary-word <-> continued-fraction correspondence.

#include "tripstern/algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tripstern {

inline const Mat3& matrix_A0() {
    static const Mat3 A0 = Mat3::from_rows({{{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}});
    return A0;
}

inline const Mat3& matrix_A1() {
    static const Mat3 A1 = Mat3::from_rows({{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}});
    return A1;
}

// Columns are the triangle vertices v1=(1,0,0), v2=(1,1,0), v3=(1,1,1).
inline const Mat3& matrix_V() {
    static const Mat3 V = Mat3::from_rows({{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}});
    return V;
}

struct TripMap {
    Perm sigma{}, tau0{}, tau1{};
    Mat3 F0, F1, V;

    std::string name() const {
        return std::string(to_string(sigma)) + "," + std::string(to_string(tau0)) + "," +
               std::string(to_string(tau1));
    }

    friend bool operator==(const TripMap& a, const TripMap& b) {
        return a.sigma == b.sigma && a.tau0 == b.tau0 && a.tau1 == b.tau1;
    }
};

inline TripMap make_trip_map(Perm sigma, Perm tau0, Perm tau1) {
    TripMap m;
    m.sigma = sigma;
    m.tau0 = tau0;
    m.tau1 = tau1;
    m.F0 = perm_matrix(sigma) * matrix_A0() * perm_matrix(tau0);
    m.F1 = perm_matrix(sigma) * matrix_A1() * perm_matrix(tau1);
    m.V = matrix_V();
    return m;
}

// Parses "sigma,tau0,tau1", e.g. "e,13,123".
inline std::optional<TripMap> parse_trip_map(std::string_view s) {
    auto c1 = s.find(',');
    if (c1 == std::string_view::npos) return std::nullopt;
    auto c2 = s.find(',', c1 + 1);
    if (c2 == std::string_view::npos) return std::nullopt;
    auto sigma = parse_perm(s.substr(0, c1));
    auto tau0 = parse_perm(s.substr(c1 + 1, c2 - c1 - 1));
    auto tau1 = parse_perm(s.substr(c2 + 1));
    if (!sigma || !tau0 || !tau1) return std::nullopt;
    return make_trip_map(*sigma, *tau0, *tau1);
}

inline TripMap parse_trip_map_or_throw(std::string_view s) {
    auto m = parse_trip_map(s);
    if (!m) throw std::invalid_argument("malformed map triplet: \"" + std::string(s) + "\"");
    return *m;
}

// All 216 maps in deterministic order (sigma major, then tau0, tau1).
inline std::vector<TripMap> all_trip_maps() {
    std::vector<TripMap> v;
    v.reserve(216);
    for (Perm s : all_perms)
        for (Perm t0 : all_perms)
            for (Perm t1 : all_perms) v.push_back(make_trip_map(s, t0, t1));
    return v;
}

// The 36 maps with sigma = e, in (tau0, tau1) order.
inline std::vector<TripMap> identity_sigma_maps() {
    std::vector<TripMap> v;
    v.reserve(36);
    for (Perm t0 : all_perms)
        for (Perm t1 : all_perms) v.push_back(make_trip_map(Perm::e, t0, t1));
    return v;
}

// V * F1^n * F0; its columns are the vertices of the n-th subtriangle of the
// fan that defines digit n.
inline Mat3 subtriangle_matrix(const TripMap& map, unsigned long long n) {
    return map.V * mat_pow(map.F1, n) * map.F0;
}

// ---------------------------------------------------------------------------
// the triangle and exact point containment

struct RationalPoint {
    Rat x, y;

    friend bool operator==(const RationalPoint& p, const RationalPoint& q) {
        return p.x == q.x && p.y == q.y;
    }
};

// Membership in the (half-open) triangle 1 >= x >= y > 0.
inline bool in_triangle(const RationalPoint& p) {
    return p.x <= 1 && p.y <= p.x && p.y > 0;
}

namespace detail {

// z-component of (b-a) x (c-a); sign gives orientation.
inline Rat cross(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int sgn(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Closed containment: p inside or on the boundary of triangle (t0,t1,t2).
inline bool in_closed_triangle(const RationalPoint& p, const RationalPoint& t0,
                               const RationalPoint& t1, const RationalPoint& t2) {
    int o = sgn(cross(t0, t1, t2));
    if (o == 0) throw std::domain_error("degenerate triangle in containment test");
    int s0 = sgn(cross(t0, t1, p));
    int s1 = sgn(cross(t1, t2, p));
    int s2 = sgn(cross(t2, t0, p));
    return (s0 == 0 || s0 == o) && (s1 == 0 || s1 == o) && (s2 == 0 || s2 == o);
}

// Central projection of an integer column vector to the plane.
inline RationalPoint project_column(const Mat3& M, int j) {
    const Int& b0 = M.at(0, j);
    if (b0 == 0) throw std::domain_error("projection of a vector with zero leading coordinate");
    return {Rat(M.at(1, j), b0), Rat(M.at(2, j), b0)};
}

// (V M V^-1)^T for integer M; the matrix that acts on (1,x,y) row vectors.
inline Mat3 conjugated_transposed(const Mat3& M) {
    return transpose(matrix_V() * M * unimodular_inverse(matrix_V()));
}

// (1,x,y) * W followed by projection.
inline std::optional<RationalPoint> apply_point(const Mat3& W, const RationalPoint& p) {
    Rat r0 = Rat(W.at(0, 0)) + p.x * Rat(W.at(1, 0)) + p.y * Rat(W.at(2, 0));
    Rat r1 = Rat(W.at(0, 1)) + p.x * Rat(W.at(1, 1)) + p.y * Rat(W.at(2, 1));
    Rat r2 = Rat(W.at(0, 2)) + p.x * Rat(W.at(1, 2)) + p.y * Rat(W.at(2, 2));
    if (r0 == 0) return std::nullopt;
    return RationalPoint{r1 / r0, r2 / r0};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the map itself

inline constexpr unsigned long default_digit_cap = 1000000;

struct TripStep {
    unsigned long digit = 0;
    RationalPoint image;
    // The walk crossed a dividing edge shared by two subtriangles.  Such
    // points follow the fixed convention that a dividing edge belongs to the
    // F1 side, so the k-th subtriangle is closed toward its predecessor and
    // open toward its successor; for the unpermuted map this reproduces
    // k = floor((1-x)/y) including the exact-tie case.
    bool on_boundary = false;
};

// One application of the map: finds the digit k with p in the k-th
// subtriangle by exact sign tests and returns the exact image point.
//
// Returns nullopt when the expansion terminates (y = 0, or the point leaves
// the triangle during the walk).  Throws std::invalid_argument for points
// outside the closed triangle and std::runtime_error when no subtriangle
// contains the point within `digit_cap` steps.
inline std::optional<TripStep> trip_apply(const TripMap& map, const RationalPoint& p,
                                          unsigned long digit_cap = default_digit_cap) {
    if (p.x > 1 || p.y > p.x || p.y < 0)
        throw std::invalid_argument("point outside the triangle 1 >= x >= y >= 0");
    if (p.y == 0) return std::nullopt;  // expansion already terminated

    const RationalPoint corner0{0, 0}, corner1{1, 0}, corner2{1, 1};
    const Mat3 child0 = matrix_V() * map.F0;
    const Mat3 child1 = matrix_V() * map.F1;
    const std::array<RationalPoint, 3> t0{detail::project_column(child0, 0),
                                          detail::project_column(child0, 1),
                                          detail::project_column(child0, 2)};
    const std::array<RationalPoint, 3> t1{detail::project_column(child1, 0),
                                          detail::project_column(child1, 1),
                                          detail::project_column(child1, 2)};
    const Mat3 f1_inv = unimodular_inverse(map.F1);
    const Mat3 unstep1 = detail::conjugated_transposed(f1_inv);

    RationalPoint cur = p;
    bool boundary = false;
    unsigned long k = 0;
    for (;; ++k) {
        if (k > digit_cap)
            throw std::runtime_error("no containing subtriangle within digit cap " +
                                     std::to_string(digit_cap));
        bool in0 = detail::in_closed_triangle(cur, t0[0], t0[1], t0[2]);
        bool in1 = detail::in_closed_triangle(cur, t1[0], t1[1], t1[2]);
        if (in0 && in1) boundary = true;  // on a dividing edge: stay on the F1 side
        if (in0 && !in1) break;
        if (!in1) return std::nullopt;  // walked out of the triangle
        auto next = detail::apply_point(unstep1, cur);
        if (!next) return std::nullopt;
        cur = *next;
        if (!detail::in_closed_triangle(cur, corner0, corner1, corner2)) return std::nullopt;
        if (cur.y == 0) return std::nullopt;
    }

    // image = pi((1,x,y) (V F0^-1 F1^-k V^-1)^T), evaluated on the original point
    Mat3 M = unimodular_inverse(map.F0) * mat_pow(f1_inv, k);
    auto img = detail::apply_point(detail::conjugated_transposed(M), p);
    if (!img) return std::nullopt;
    return TripStep{k, *img, boundary};
}

struct DigitSequence {
    std::vector<unsigned long> digits;
    bool terminated = false;   // expansion stopped before max_digits
    std::string stop_reason;   // set when terminated
    bool hit_boundary = false; // some digit was decided on a dividing edge
};

// The digit sequence (t_0, t_1, ...) of p, truncated at max_digits.  A
// boundary termination or an exhausted digit cap truncates the sequence and
// sets the marker; only a bad starting point throws.
inline DigitSequence trip_digits(const TripMap& map, const RationalPoint& p, std::size_t max_digits,
                                 unsigned long digit_cap = default_digit_cap) {
    DigitSequence out;
    RationalPoint cur = p;
    while (out.digits.size() < max_digits) {
        std::optional<TripStep> step;
        try {
            step = trip_apply(map, cur, digit_cap);
        } catch (const std::runtime_error& e) {
            out.terminated = true;
            out.stop_reason = e.what();
            break;
        }
        if (!step) {
            out.terminated = true;
            out.stop_reason = "expansion terminated on a boundary";
            break;
        }
        out.digits.push_back(step->digit);
        out.hit_boundary = out.hit_boundary || step->on_boundary;
        cur = step->image;
    }
    return out;
}

// ---------------------------------------------------------------------------
// one-dimensional baseline

struct GaussStep {
    Int digit;   // partial quotient, x in (1/(k+1), 1/k]
    Rat image;   // (1 - k x)/x; zero when the expansion terminates
};

inline GaussStep gauss_step(const Rat& x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("gauss_step requires x in (0,1]");
    Int k = floor_rat(1 / x);
    return {k, 1 / x - Rat(k)};
}

// Run-length decoding of a subdivision address (1^{k0} 0 1^{k1} 0 ...) into
// partial quotients (k0+1, k1+1, ...); an unterminated trailing run of ones
// is dropped.
inline std::vector<unsigned long> cf_from_binary_word(const BinaryWord& word) {
    std::vector<unsigned long> q;
    unsigned long run = 0;
    for (auto b : word) {
        if (b) {
            ++run;
        } else {
            q.push_back(run + 1);
            run = 0;
        }
    }
    return q;
}

}  // namespace tripstern
