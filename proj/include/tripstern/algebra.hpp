#pragma once

// Exact linear algebra over 3x3 integer matrices, the six permutations of
// {1,2,3} as column permutation matrices, and triples acting as row vectors
// multiplied on the right.  Everything here is an immutable value; all
// operations are pure.

#include "tripstern/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tripstern {

// ---------------------------------------------------------------------------
// permutations of {1,2,3}

enum class Perm : std::uint8_t { e = 0, p12, p13, p23, p123, p132 };

inline constexpr std::array<Perm, 6> all_perms{Perm::e,   Perm::p12,  Perm::p13,
                                               Perm::p23, Perm::p123, Perm::p132};

// Cycle notation without parentheses: "e", "12", "13", "23", "123", "132".
inline std::string_view to_string(Perm p) {
    switch (p) {
        case Perm::e: return "e";
        case Perm::p12: return "12";
        case Perm::p13: return "13";
        case Perm::p23: return "23";
        case Perm::p123: return "123";
        case Perm::p132: return "132";
    }
    throw std::logic_error("bad Perm tag");
}

inline std::optional<Perm> parse_perm(std::string_view s) {
    for (Perm p : all_perms)
        if (s == to_string(p)) return p;
    return std::nullopt;
}

// One-line image table: perm_image[p][i] is where slot i goes, 0-based.
// p12 swaps slots 0,1; p123 maps 0->1->2->0; p132 maps 0->2->1->0.
inline constexpr std::array<std::array<int, 3>, 6> perm_image{{
    {0, 1, 2},  // e
    {1, 0, 2},  // 12
    {2, 1, 0},  // 13
    {0, 2, 1},  // 23
    {1, 2, 0},  // 123
    {2, 0, 1},  // 132
}};

inline Perm compose(Perm p, Perm q) {
    // image of (p then q): i -> q(p(i))
    const auto& ip = perm_image[static_cast<int>(p)];
    const auto& iq = perm_image[static_cast<int>(q)];
    std::array<int, 3> im{iq[ip[0]], iq[ip[1]], iq[ip[2]]};
    for (int t = 0; t < 6; ++t)
        if (perm_image[t] == im) return static_cast<Perm>(t);
    throw std::logic_error("permutation composition fell outside S3");
}

inline Perm inverse(Perm p) {
    const auto& ip = perm_image[static_cast<int>(p)];
    std::array<int, 3> im{};
    for (int i = 0; i < 3; ++i) im[ip[i]] = i;
    for (int t = 0; t < 6; ++t)
        if (perm_image[t] == im) return static_cast<Perm>(t);
    throw std::logic_error("permutation inverse fell outside S3");
}

// ---------------------------------------------------------------------------
// 3x3 integer matrices

struct Mat3 {
    std::array<Int, 9> m{};  // row-major

    Int& at(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
    const Int& at(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 from_rows(std::array<std::array<long, 3>, 3> rows) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return r;
    }

    static Mat3 identity() { return from_rows({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }
};

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int acc = a.at(i, 0) * b.at(0, j);
            acc += a.at(i, 1) * b.at(1, j);
            acc += a.at(i, 2) * b.at(2, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) { return mat_mul(a, b); }

inline Mat3 mat_add(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.m[static_cast<std::size_t>(k)] = a.m[static_cast<std::size_t>(k)] + b.m[static_cast<std::size_t>(k)];
    return r;
}

inline Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = a.at(j, i);
    return r;
}

inline Int det(const Mat3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

inline Mat3 adjugate(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adj = transpose of cofactor matrix
            r.at(j, i) = a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
        }
    return r;
}

// Exact integer inverse of a matrix with det = +-1.
inline Mat3 unimodular_inverse(const Mat3& a) {
    Int d = det(a);
    if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular, det = " + d.str());
    Mat3 r = adjugate(a);
    if (d == -1)
        for (auto& v : r.m) v = -v;
    return r;
}

inline Mat3 mat_pow(Mat3 base, unsigned long long e) {
    Mat3 r = Mat3::identity();
    while (e > 0) {
        if (e & 1ULL) r = r * base;
        base = base * base;
        e >>= 1ULL;
    }
    return r;
}

// The explicit column permutation matrices for the six tags.
inline Mat3 perm_matrix(Perm p) {
    switch (p) {
        case Perm::e: return Mat3::identity();
        case Perm::p12: return Mat3::from_rows({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
        case Perm::p13: return Mat3::from_rows({{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}});
        case Perm::p23: return Mat3::from_rows({{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}});
        case Perm::p123: return Mat3::from_rows({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
        case Perm::p132: return Mat3::from_rows({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
    }
    throw std::logic_error("bad Perm tag");
}

// ---------------------------------------------------------------------------
// triples (row vectors)

template <typename T>
struct Triple {
    T a{}, b{}, c{};

    friend bool operator==(const Triple& x, const Triple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(const Triple& x, const Triple& y) { return !(x == y); }
    friend bool operator<(const Triple& x, const Triple& y) {  // lexicographic
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
    friend Triple operator+(const Triple& x, const Triple& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c};
    }

    const T& operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
    T& operator[](int i) { return i == 0 ? a : (i == 1 ? b : c); }

    T sum() const { return a + b + c; }
};

using ITriple = Triple<Int>;
using RTriple = Triple<Rat>;

inline RTriple to_rational(const ITriple& t) { return {Rat(t.a), Rat(t.b), Rat(t.c)}; }

// True when all three entries are integers (safe to run on the Int lane).
inline bool is_integral(const RTriple& t) {
    return is_integer(t.a) && is_integer(t.b) && is_integer(t.c);
}

inline ITriple to_integral(const RTriple& t) {
    if (!is_integral(t)) throw std::domain_error("triple has non-integer entries");
    return {num(t.a), num(t.b), num(t.c)};
}

// (a,b,c) * M with the triple as a row vector on the left.
template <typename T>
Triple<T> row_apply(const Triple<T>& t, const Mat3& M) {
    Triple<T> r;
    for (int j = 0; j < 3; ++j) {
        T acc = t.a * T(M.at(0, j));
        acc += t.b * T(M.at(1, j));
        acc += t.c * T(M.at(2, j));
        r[j] = std::move(acc);
    }
    return r;
}

template <typename T>
std::string to_string(const Triple<T>& t);

template <>
inline std::string to_string(const ITriple& t) {
    return "(" + t.a.str() + "," + t.b.str() + "," + t.c.str() + ")";
}

template <>
inline std::string to_string(const RTriple& t) {
    return "(" + format_rat(t.a) + "," + format_rat(t.b) + "," + format_rat(t.c) + ")";
}

// ---------------------------------------------------------------------------
// fast path for 0/1 matrices
//
// Every F0/F1 in the family is a 0/1 matrix whose column sums are 1 or 2, so
// one tree edge costs at most three additions.  RowAction precomputes, per
// output slot, which input slots feed it.

struct RowAction {
    std::array<std::array<int, 2>, 3> cols{};  // second index -1 when unused
    bool valid = false;

    static std::optional<RowAction> from(const Mat3& M) {
        RowAction act;
        for (int j = 0; j < 3; ++j) {
            int n = 0;
            act.cols[static_cast<std::size_t>(j)] = {-1, -1};
            for (int i = 0; i < 3; ++i) {
                const Int& v = M.at(i, j);
                if (v == 0) continue;
                if (v != 1 || n == 2) return std::nullopt;
                act.cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(n++)] = i;
            }
            if (n == 0) return std::nullopt;
        }
        act.valid = true;
        return act;
    }

    template <typename T>
    void apply(const Triple<T>& in, Triple<T>& out) const {
        for (int j = 0; j < 3; ++j) {
            out[j] = in[cols[static_cast<std::size_t>(j)][0]];
            if (cols[static_cast<std::size_t>(j)][1] >= 0) out[j] += in[cols[static_cast<std::size_t>(j)][1]];
        }
    }
};

// Binary words address nodes of the subdivision trees; bit i_1 comes first.
using BinaryWord = std::vector<unsigned char>;

inline std::string to_string(const BinaryWord& w) {
    std::string s;
    s.reserve(w.size());
    for (auto b : w) s += b ? '1' : '0';
    return s;
}

}  // namespace tripstern
