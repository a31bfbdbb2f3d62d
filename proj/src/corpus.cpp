#include "simplicia/corpus.hpp"

#include "simplicia/complex_ops.hpp"
#include "simplicia/subdivision.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace simplicia {

namespace {

Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

struct Layout
{
    std::size_t ambient_dim;
    std::vector<std::pair<std::string, Point>> vertices;
    std::vector<std::vector<std::string>> simplices;
};

GeometricComplex make(const Layout& layout)
{
    ComplexBuilder b(layout.ambient_dim);
    for (const auto& [label, point] : layout.vertices)
        b.add_vertex(label, point);
    for (const auto& labels : layout.simplices) {
        Simplex::Storage ids;
        for (const auto& l : labels)
            ids.push_back(*b.find_vertex(l));
        b.add_closed(Simplex(std::move(ids)));
    }
    return std::move(b).build();
}

// Reproducible across standard libraries: only raw mt19937 output is used.
Rational jitter(std::mt19937& gen, long steps, long denominator)
{
    const long k = static_cast<long>(gen() % static_cast<std::uint32_t>(2 * steps + 1)) - steps;
    return q(k, denominator);
}

GeometricComplex without(const GeometricComplex& k, const std::vector<std::string>& labels)
{
    const Simplex dropped = k.simplex_from_labels(std::span<const std::string>(labels));
    return subcomplex_where(k, [&](const Simplex& s) { return !(s == dropped); });
}

}  // namespace

namespace fixtures {

GeometricComplex triangle()
{
    return make({2, {{"A", {q(0), q(0)}}, {"B", {q(1), q(0)}}, {"C", {q(1, 5), q(9, 10)}}}, {{"A", "B", "C"}}});
}

GeometricComplex triangle_split()
{
    return make({2,
                 {{"A", {q(0), q(0)}}, {"B", {q(1), q(0)}}, {"C", {q(1, 5), q(9, 10)}}, {"D", {q(1, 2), q(0)}}},
                 {{"A", "D", "C"}, {"B", "D", "C"}}});
}

GeometricComplex edge_ab()
{
    return make({2, {{"A", {q(0), q(0)}}, {"B", {q(1), q(0)}}}, {{"A", "B"}}});
}

GeometricComplex edge_ab_split()
{
    return make({2, {{"A", {q(0), q(0)}}, {"B", {q(1), q(0)}}, {"D", {q(1, 2), q(0)}}}, {{"A", "D"}, {"B", "D"}}});
}

GeometricComplex star_triangle()
{
    return make({2, {{"A", {q(0), q(0)}}, {"B", {q(1), q(0)}}, {"C", {q(1, 4), q(17, 20)}}}, {{"A", "B", "C"}}});
}

GeometricComplex coned_triangle()
{
    return make({2,
                 {{"A", {q(0), q(0)}},
                  {"B", {q(1), q(0)}},
                  {"C", {q(1, 4), q(17, 20)}},
                  {"D", {q(5, 12), q(17, 60)}}},
                 {{"D", "A", "B"}, {"D", "B", "C"}, {"D", "C", "A"}}});
}

GeometricComplex segment()
{
    return make({2, {{"A", {q(0), q(0)}}, {"B", {q(3), q(0)}}}, {{"A", "B"}}});
}

GeometricComplex barycenter_triangle()
{
    return make({2, {{"v0", {q(0), q(0)}}, {"v1", {q(1), q(0)}}, {"v2", {q(1, 4), q(17, 20)}}}, {{"v0", "v1", "v2"}}});
}

GeometricComplex triangle_with_tail()
{
    return make({2,
                 {{"v0", {q(0), q(0)}},
                  {"v1", {q(1), q(0)}},
                  {"v2", {q(1, 5), q(17, 20)}},
                  {"w", {q(-11, 20), q(-1, 20)}}},
                 {{"v0", "v1", "v2"}, {"v0", "w"}}});
}

GeometricComplex standard_simplex(int n)
{
    if (n < 0)
        throw std::invalid_argument("standard_simplex: negative dimension");
    const auto d = static_cast<std::size_t>(std::max(n, 1));
    Layout layout{d, {}, {{}}};
    for (int i = 0; i <= n; ++i) {
        Point p = Point::zero(d);
        if (i > 0)
            p[i - 1] = 1;
        layout.vertices.emplace_back("v" + std::to_string(i), p);
        layout.simplices[0].push_back("v" + std::to_string(i));
    }
    return make(layout);
}

GeometricComplex random_strip(std::uint32_t seed, int cells)
{
    std::mt19937 gen(seed);
    Layout layout{2, {}, {}};
    for (int i = 0; i <= cells; ++i) {
        layout.vertices.emplace_back("p" + std::to_string(i), Point{q(i) + jitter(gen, 4, 20), jitter(gen, 4, 20)});
        layout.vertices.emplace_back("u" + std::to_string(i),
                                   Point{q(2 * i + 1, 2) + jitter(gen, 4, 20), q(1) + jitter(gen, 4, 20)});
    }
    for (int i = 0; i < cells; ++i) {
        const auto p0 = "p" + std::to_string(i), p1 = "p" + std::to_string(i + 1);
        const auto u0 = "u" + std::to_string(i), u1 = "u" + std::to_string(i + 1);
        layout.simplices.push_back({p0, u0, p1});
        layout.simplices.push_back({u0, p1, u1});
    }
    return make(layout);
}

GeometricComplex random_polyline(std::uint32_t seed, int edges)
{
    std::mt19937 gen(seed);
    Layout layout{2, {}, {}};
    for (int i = 0; i <= edges; ++i)
        layout.vertices.emplace_back("x" + std::to_string(i), Point{q(i), jitter(gen, 10, 10)});
    for (int i = 0; i < edges; ++i)
        layout.simplices.push_back({"x" + std::to_string(i), "x" + std::to_string(i + 1)});
    return make(layout);
}

GeometricComplex twin_tetrahedra(std::uint32_t seed)
{
    std::mt19937 gen(seed);
    auto coordinate = [&]() -> Rational { return q(3, 10) + jitter(gen, 3, 20); };
    Layout layout{3, {}, {}};
    layout.vertices.emplace_back("a", Point{q(0), q(0), q(0)});
    layout.vertices.emplace_back("b", Point{q(1), q(0), q(0)});
    layout.vertices.emplace_back("c", Point{q(0), q(1), q(0)});
    layout.vertices.emplace_back("n", Point{coordinate(), coordinate(), q(1) + jitter(gen, 4, 20)});
    layout.vertices.emplace_back("s", Point{coordinate(), coordinate(), q(-1) + jitter(gen, 4, 20)});
    layout.simplices = {{"a", "b", "c", "n"}, {"a", "b", "c", "s"}};
    return make(layout);
}

GeometricComplex overlapping_triangles()
{
    // [ABC] and [DBE] share only the half [DB] of the edge [AB].
    ComplexBuilder b(2);
    const VertexId a = b.add_vertex("A", {q(0), q(0)});
    const VertexId bb = b.add_vertex("B", {q(1), q(0)});
    const VertexId c = b.add_vertex("C", {q(1, 5), q(9, 10)});
    const VertexId d = b.add_vertex("D", {q(1, 2), q(0)});
    const VertexId e = b.add_vertex("E", {q(3, 4), q(-4, 5)});
    b.add_closed(Simplex{a, bb, c});
    b.add_closed(Simplex{d, bb, e});
    return std::move(b).build();
}

}  // namespace fixtures

std::vector<Fixture> shipped_corpus()
{
    std::vector<Fixture> corpus;
    corpus.push_back({"triangle", fixtures::triangle(), fixtures::triangle_split()});
    corpus.push_back({"triangle-split", fixtures::triangle_split(), std::nullopt});
    corpus.push_back({"edge-ab", fixtures::edge_ab(), fixtures::edge_ab_split()});
    corpus.push_back({"star-triangle", fixtures::star_triangle(), fixtures::coned_triangle()});
    corpus.push_back({"coned-triangle", fixtures::coned_triangle(), std::nullopt});
    corpus.push_back({"segment", fixtures::segment(), std::nullopt});
    corpus.push_back({"barycenter-triangle", fixtures::barycenter_triangle(), std::nullopt});
    corpus.push_back({"triangle-with-tail", fixtures::triangle_with_tail(), std::nullopt});
    for (int n = 0; n <= 4; ++n)
        corpus.push_back({"simplex-" + std::to_string(n), fixtures::standard_simplex(n), std::nullopt});
    corpus.push_back({"random-strip", fixtures::random_strip(7), std::nullopt});
    corpus.push_back({"random-polyline", fixtures::random_polyline(11), std::nullopt});
    corpus.push_back({"twin-tetrahedra", fixtures::twin_tetrahedra(13), std::nullopt});
    std::sort(corpus.begin(), corpus.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return corpus;
}

std::vector<FaultyFixture> faulty_corpus()
{
    std::vector<FaultyFixture> faults;

    faults.push_back({{"fault-closure-gap", without(fixtures::triangle(), {"B", "C"}), std::nullopt}, "face closure"});

    {
        ComplexBuilder b(2);
        const VertexId a = b.add_vertex("A", {q(0), q(0)});
        const VertexId m = b.add_vertex("M", {q(1, 2), q(1, 2)});
        const VertexId c = b.add_vertex("C", {q(1), q(1)});
        b.add_closed(Simplex{a, m, c});
        faults.push_back({{"fault-collinear-triangle", std::move(b).build(), std::nullopt}, "affine independence"});
    }

    faults.push_back(
        {{"fault-overlapping-triangles", fixtures::overlapping_triangles(), std::nullopt}, "proper intersection"});

    faults.push_back({{"fault-split-missing-triangle", fixtures::triangle(),
                       without(fixtures::triangle_split(), {"B", "C", "D"})},
                      "claimed subdivision"});

    {
        const GeometricComplex k = fixtures::standard_simplex(2);
        const GeometricComplex bsd = barycentric_subdivide(k).complex;
        Simplex last;
        for (const auto& s : bsd.simplices())
            if (s.dim() == 2)
                last = s;
        GeometricComplex holed = subcomplex_where(bsd, [&](const Simplex& s) { return !(s == last); });
        faults.push_back({{"fault-bsd-missing-piece", k, std::move(holed)}, "claimed realization"});
    }
    return faults;
}

Fixture find_fixture(const std::string& name)
{
    for (auto& f : shipped_corpus())
        if (f.name == name)
            return f;
    for (auto& f : faulty_corpus())
        if (f.fixture.name == name)
            return f.fixture;
    throw std::out_of_range("unknown fixture '" + name + "'");
}

}  // namespace simplicia
