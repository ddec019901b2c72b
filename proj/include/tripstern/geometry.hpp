#pragma once

// Planar realization of the subdivisions: central projection of subdivision
// matrices, the cell list at a given depth, exact areas, and SVG output.

#include "tripstern/stern.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace tripstern {

inline constexpr int default_subdivision_cap = 12;

struct PlanePoint {
    Rat x, y;

    friend bool operator==(const PlanePoint& p, const PlanePoint& q) {
        return p.x == q.x && p.y == q.y;
    }
};

// Central projection (b0,b1,b2) -> (b1/b0, b2/b0).
inline PlanePoint project_pi(const ITriple& v) {
    if (v.a == 0) throw std::domain_error("cannot project a vector with zero leading coordinate");
    return {Rat(v.b, v.a), Rat(v.c, v.a)};
}

struct SubdivisionCell {
    BinaryWord word;
    std::array<PlanePoint, 3> vertices;  // projected columns, in column order
    ITriple label;                       // leading coordinates of the columns
};

// All 2^depth cells of the subdivision after `depth` divisions, in word
// order (depth 0: the whole triangle).
inline std::vector<SubdivisionCell> subdivision(const TripMap& map, int depth,
                                                int depth_cap = default_subdivision_cap) {
    if (depth < 0 || depth > depth_cap)
        throw std::invalid_argument("subdivision depth out of range");
    struct Node {
        Mat3 M;
        BinaryWord word;
    };
    std::vector<Node> cur{{map.V, {}}};
    for (int d = 0; d < depth; ++d) {
        std::vector<Node> next;
        next.reserve(cur.size() * 2);
        for (const auto& n : cur) {
            BinaryWord w0 = n.word, w1 = n.word;
            w0.push_back(0);
            w1.push_back(1);
            next.push_back({n.M * map.F0, std::move(w0)});
            next.push_back({n.M * map.F1, std::move(w1)});
        }
        cur = std::move(next);
    }
    std::vector<SubdivisionCell> cells;
    cells.reserve(cur.size());
    for (auto& n : cur) {
        SubdivisionCell c;
        c.word = std::move(n.word);
        for (int j = 0; j < 3; ++j) {
            ITriple col{n.M.at(0, j), n.M.at(1, j), n.M.at(2, j)};
            c.vertices[static_cast<std::size_t>(j)] = project_pi(col);
        }
        c.label = {n.M.at(0, 0), n.M.at(0, 1), n.M.at(0, 2)};
        cells.push_back(std::move(c));
    }
    return cells;
}

// Signed area (shoelace); vertex order decides the sign.
inline Rat cell_signed_area(const SubdivisionCell& c) {
    const auto& v = c.vertices;
    Rat s = v[0].x * (v[1].y - v[2].y) + v[1].x * (v[2].y - v[0].y) + v[2].x * (v[0].y - v[1].y);
    return s / 2;
}

inline Rat cell_area(const SubdivisionCell& c) {
    Rat s = cell_signed_area(c);
    return s < 0 ? -s : s;
}

// ---------------------------------------------------------------------------
// SVG

struct SvgOptions {
    int size = 1000;      // square viewport, y axis flipped
    bool labels = false;  // print the leading coordinate at each vertex
    const char* stroke = "#1a1a1a";
    const char* stroke_width = "1";
};

namespace detail {

// Fixed-point decimal with 6 places, trailing zeros trimmed; exactness is
// only given up at this final formatting step.
inline std::string svg_coord(const Rat& v) {
    Int scaled = floor_rat(v * 1000000 + Rat(1, 2));
    bool neg = scaled < 0;
    Int mag = neg ? Int(-scaled) : scaled;
    Int ip = mag / 1000000, fp = mag % 1000000;
    std::string s = (neg ? "-" : "") + ip.str();
    if (fp != 0) {
        std::string frac = fp.str();
        frac.insert(frac.begin(), 6 - frac.size(), '0');
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        s += "." + frac;
    }
    return s;
}

}  // namespace detail

// Deterministic SVG 1.1 document: one stroked <polygon> per cell, cells in
// input order, optional vertex labels.
inline std::string render_svg(const std::vector<SubdivisionCell>& cells,
                              const SvgOptions& options = {}) {
    const Rat scale(options.size);
    auto tx = [&](const Rat& x) { return detail::svg_coord(x * scale); };
    auto ty = [&](const Rat& y) { return detail::svg_coord((1 - y) * scale); };  // flip y

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
           std::to_string(options.size) + " " + std::to_string(options.size) + "\">\n";
    svg += "<g fill=\"none\" stroke=\"" + std::string(options.stroke) + "\" stroke-width=\"" +
           std::string(options.stroke_width) + "\">\n";
    for (const auto& c : cells) {
        svg += "<polygon points=\"";
        for (int j = 0; j < 3; ++j) {
            if (j) svg += " ";
            svg += tx(c.vertices[static_cast<std::size_t>(j)].x) + "," +
                   ty(c.vertices[static_cast<std::size_t>(j)].y);
        }
        svg += "\"/>\n";
    }
    svg += "</g>\n";
    if (options.labels) {
        svg += "<g font-size=\"12\" fill=\"#444\">\n";
        for (const auto& c : cells)
            for (int j = 0; j < 3; ++j) {
                svg += "<text x=\"" + tx(c.vertices[static_cast<std::size_t>(j)].x) + "\" y=\"" +
                       ty(c.vertices[static_cast<std::size_t>(j)].y) + "\">" +
                       c.label[j].str() + "</text>\n";
            }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tripstern
