#include "tripstern/geometry.hpp"
#include "tripstern/stern.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace tripstern;
using test_helpers::random_map;
using test_helpers::rng;

TEST_CASE("central projection", "[geometry]") {
    CHECK(project_pi({1, 1, 1}) == PlanePoint{1, 1});
    CHECK(project_pi({1, 0, 0}) == PlanePoint{0, 0});
    CHECK(project_pi({2, 1, 1}) == PlanePoint{Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(project_pi({0, 1, 1}), std::domain_error);
}

TEST_CASE("depth zero is the whole triangle", "[geometry]") {
    auto g = rng(3);
    auto cells = subdivision(random_map(g), 0);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].vertices[0] == PlanePoint{0, 0});
    CHECK(cells[0].vertices[1] == PlanePoint{1, 0});
    CHECK(cells[0].vertices[2] == PlanePoint{1, 1});
    CHECK(cells[0].label == ITriple{1, 1, 1});
}

TEST_CASE("the first division splits along one segment", "[geometry]") {
    auto cells = subdivision(parse_trip_map_or_throw("e,e,e"), 1);
    REQUIRE(cells.size() == 2);
    std::set<std::pair<std::string, std::string>> v0, v1;
    for (int j = 0; j < 3; ++j) {
        v0.insert({format_rat(cells[0].vertices[static_cast<std::size_t>(j)].x),
                   format_rat(cells[0].vertices[static_cast<std::size_t>(j)].y)});
        v1.insert({format_rat(cells[1].vertices[static_cast<std::size_t>(j)].x),
                   format_rat(cells[1].vertices[static_cast<std::size_t>(j)].y)});
    }
    std::set<std::pair<std::string, std::string>> shared;
    for (const auto& v : v0)
        if (v1.count(v)) shared.insert(v);
    CHECK(shared == std::set<std::pair<std::string, std::string>>{{"1", "0"}, {"1/2", "1/2"}});
}

TEST_CASE("cell labels come from the word action", "[geometry]") {
    auto m12 = parse_trip_map_or_throw("12,e,e");
    auto cells = subdivision(m12, 2);
    REQUIRE(cells.size() == 4);
    CHECK(cells[0].word == BinaryWord{0, 0});
    CHECK(cells[0].label == ITriple{1, 2, 3});

    auto g = rng(5);
    for (int it = 0; it < 6; ++it) {
        auto map = random_map(g);
        for (const auto& c : subdivision(map, 4))
            CHECK(c.label == triangle_word<Int>(map, c.word, {1, 1, 1}));
    }
}

TEST_CASE("cells tile the triangle exactly", "[geometry]") {
    auto g = rng(7);
    for (int it = 0; it < 10; ++it) {
        auto map = random_map(g);
        int depth = static_cast<int>(test_helpers::rand_in(g, 1, 6));
        Rat area = 0;
        for (const auto& c : subdivision(map, depth)) area += cell_area(c);
        CHECK(area == Rat(1, 2));
    }
}

TEST_CASE("children stay inside their parent", "[geometry]") {
    auto g = rng(11);
    auto in_closed = [](const PlanePoint& p, const SubdivisionCell& cell) {
        RationalPoint q{p.x, p.y};
        return detail::in_closed_triangle(
            q, RationalPoint{cell.vertices[0].x, cell.vertices[0].y},
            RationalPoint{cell.vertices[1].x, cell.vertices[1].y},
            RationalPoint{cell.vertices[2].x, cell.vertices[2].y});
    };
    for (int it = 0; it < 5; ++it) {
        auto map = random_map(g);
        auto parents = subdivision(map, 3);
        auto children = subdivision(map, 4);
        for (const auto& child : children) {
            BinaryWord pw(child.word.begin(), child.word.end() - 1);
            const SubdivisionCell* parent = nullptr;
            for (const auto& p : parents)
                if (p.word == pw) parent = &p;
            REQUIRE(parent != nullptr);
            for (const auto& v : child.vertices) CHECK(in_closed(v, *parent));
        }
    }
}

TEST_CASE("svg output is deterministic and complete", "[geometry]") {
    auto eee = parse_trip_map_or_throw("e,e,e");
    auto cells = subdivision(eee, 6);
    auto svg = render_svg(cells);
    CHECK(svg == render_svg(cells));

    std::size_t polys = 0;
    for (std::size_t p = svg.find("<polygon"); p != std::string::npos;
         p = svg.find("<polygon", p + 1))
        ++polys;
    CHECK(polys == 64);

    auto one = render_svg(subdivision(eee, 0));
    CHECK(one.find("<polygon points=\"0,1000 1000,1000 1000,0\"/>") != std::string::npos);
    CHECK(one.find("<text") == std::string::npos);

    SvgOptions opt;
    opt.labels = true;
    auto labeled = render_svg(subdivision(eee, 1), opt);
    CHECK(labeled.find("<text") != std::string::npos);
}

TEST_CASE("subdivision depth is capped", "[geometry]") {
    auto eee = parse_trip_map_or_throw("e,e,e");
    CHECK_THROWS_AS(subdivision(eee, 13), std::invalid_argument);
    CHECK_THROWS_AS(subdivision(eee, -1), std::invalid_argument);
}
