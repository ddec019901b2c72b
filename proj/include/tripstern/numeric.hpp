#pragma once

// Exact scalar types shared by the whole library: arbitrary-precision
// integers and rationals (Boost.Multiprecision), plus the "p/q" string
// format used on every CLI/JSON surface.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tripstern {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// Floor division toward -infinity; b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

// Serializes as "p" for integers, "p/q" otherwise.
inline std::string format_rat(const Rat& q) {
    std::string s = num(q).str();
    if (!is_integer(q)) s += "/" + den(q).str();
    return s;
}

inline std::optional<Int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = s[0] == '-';
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    Int v{std::string(s.substr(i))};
    return neg ? Int(-v) : v;
}

// Accepts "p" or "p/q" with nonzero q; the sign may sit on either part.
inline std::optional<Rat> parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    if (*d < 0) {
        *n = -*n;
        *d = -*d;
    }
    return Rat(*n, *d);
}

inline Rat parse_rat_or_throw(std::string_view s) {
    auto q = parse_rat(s);
    if (!q) throw std::invalid_argument("malformed rational: \"" + std::string(s) + "\"");
    return *q;
}

}  // namespace tripstern
