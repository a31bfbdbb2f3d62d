#include "simplicia/corpus.hpp"
#include "simplicia/export.hpp"
#include "simplicia/subdivision.hpp"

#include <doctest.h>

#include <sstream>

using namespace simplicia;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("svg of the first subdivision")
{
    const auto svg = to_svg(barycentric_subdivide(fixtures::triangle()).complex);
    CHECK(svg.starts_with("<?xml"));
    CHECK(occurrences(svg, "<svg") == 1);
    CHECK(occurrences(svg, "</svg>") == 1);
    CHECK(occurrences(svg, "<polygon") == 6);
    CHECK(occurrences(svg, "<line") == 12);
    CHECK(occurrences(svg, "<circle") == 7);
    CHECK(occurrences(svg, "<text") == 7);
    CHECK(svg.find(">b(A,B,C)<") != std::string::npos);
}

TEST_CASE("svg of the second subdivision")
{
    const auto k = barycentric_subdivide_n(fixtures::triangle(), 2);
    const auto svg = to_svg(k);
    CHECK(occurrences(svg, "<polygon") == 36);
    CHECK(occurrences(svg, "<circle") == k.vertex_count());
    CHECK(occurrences(svg, "<text") == 25);
    CHECK(occurrences(to_svg(k, SvgOptions{480, 32, 24}), "<text") == 0);
    CHECK(occurrences(to_svg(barycentric_subdivide_n(fixtures::triangle(), 3)), "<text") == 0);
    CHECK(svg == to_svg(k));
}

TEST_CASE("svg of an empty complex is a blank canvas")
{
    const auto svg = to_svg(ComplexBuilder(2).build());
    CHECK(occurrences(svg, "<svg") == 1);
    CHECK(occurrences(svg, "</svg>") == 1);
    CHECK(occurrences(svg, "<polygon") == 0);
    CHECK(occurrences(svg, "<circle") == 0);
}

TEST_CASE("svg coordinates stay inside the canvas")
{
    const auto svg = to_svg(fixtures::triangle_with_tail(), SvgOptions{200, 10, 40});
    std::istringstream in(svg);
    std::string token;
    while (in >> token) {
        for (const char* attr : {"cx=\"", "cy=\"", "x1=\"", "y1=\""}) {
            if (token.starts_with(attr)) {
                const double v = std::stod(token.substr(std::string(attr).size()));
                CHECK(v >= 0);
                CHECK(v <= 200);
            }
        }
    }
}

TEST_CASE("svg needs a planar complex")
{
    CHECK_THROWS_AS(to_svg(fixtures::standard_simplex(3)), UnsupportedDimension);
    ComplexBuilder line(1);
    line.add_closed(Simplex{line.add_vertex("a", Point{0}), line.add_vertex("b", Point{1})});
    CHECK_THROWS_AS(to_svg(line.build()), UnsupportedDimension);
}

TEST_CASE("off export")
{
    const auto off = to_off(fixtures::standard_simplex(3));
    std::istringstream in(off);
    std::string header;
    std::size_t v = 0, f = 0, e = 1;
    in >> header >> v >> f >> e;
    CHECK(header == "OFF");
    CHECK(v == 4);
    CHECK(f == 4);
    CHECK(e == 0);
    for (std::size_t i = 0; i < v; ++i) {
        double x, y, z;
        CHECK(static_cast<bool>(in >> x >> y >> z));
    }
    for (std::size_t i = 0; i < f; ++i) {
        int n, a, b, c;
        in >> n >> a >> b >> c;
        CHECK(n == 3);
        CHECK((a >= 0 && b >= 0 && c >= 0 && a < 4 && b < 4 && c < 4));
    }

    const auto planar = to_off(barycentric_subdivide(fixtures::triangle()).complex);
    CHECK(planar.starts_with("OFF\n7 6 0\n"));
    CHECK(to_off(fixtures::segment()).starts_with("OFF\n2 0 0\n0 0 0\n3 0 0\n"));
    CHECK_THROWS_AS(to_off(fixtures::standard_simplex(4)), UnsupportedDimension);
}
