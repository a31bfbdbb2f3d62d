#include "helpers.hpp"

#include "simplicia/complex.hpp"
#include "simplicia/corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace simplicia;
using testing::complex_of;

TEST_CASE("simplex normalizes vertex order and rejects repeats")
{
    Simplex s{3, 1, 2};
    CHECK(s.dim() == 2);
    CHECK(std::vector<VertexId>(s.begin(), s.end()) == std::vector<VertexId>{1, 2, 3});
    CHECK(s == Simplex{2, 3, 1});
    CHECK_THROWS_AS((Simplex{1, 1}), StructuralError);
    CHECK(Simplex().empty());
    CHECK(Simplex().dim() == -1);
}

TEST_CASE("faces, facets and vertex edits")
{
    Simplex s{0, 1, 2, 3};
    CHECK(s.faces().size() == 15);
    CHECK(s.facets().size() == 4);
    CHECK(Simplex{7}.facets().empty());
    CHECK(Simplex{1, 2}.is_face_of(s));
    CHECK(s.is_face_of(s));
    CHECK_FALSE(Simplex{1, 4}.is_face_of(s));
    CHECK(s.without_vertex(2) == Simplex{0, 1, 3});
    CHECK(Simplex{0, 3}.with_vertex(1) == Simplex{0, 1, 3});
    for (const auto& f : s.facets())
        CHECK(f.dim() == 2);
}

TEST_CASE("simplex order is by dimension, then lexicographic")
{
    std::vector<Simplex> v{{0, 1}, {2}, {0, 2}, {0}, {0, 1, 2}};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Simplex>{{0}, {2}, {0, 1}, {0, 2}, {0, 1, 2}});
}

TEST_CASE("builder closes faces and deduplicates")
{
    ComplexBuilder b(2);
    auto a = b.add_vertex("A", Point{0, 0});
    auto c = b.add_vertex("C", Point{0, 1});
    auto bb = b.add_vertex("B", Point{1, 0});
    CHECK(b.add_vertex("A", Point{0, 0}) == a);
    CHECK_THROWS_AS(b.add_vertex("A", Point{1, 1}), StructuralError);
    CHECK_THROWS_AS(b.add_vertex("Z", Point{1}), StructuralError);
    b.add_closed(Simplex{a, bb, c});
    b.add_closed(Simplex{a, bb});
    CHECK_THROWS_AS(b.add_simplex(Simplex{a, 9}), StructuralError);
    const GeometricComplex k = std::move(b).build();
    CHECK(k.size() == 7);
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(k.dimension() == 2);
    REQUIRE(k.maximal().size() == 1);
    CHECK(k.name_of(k.simplex(k.maximal()[0])) == "[A,B,C]");
    CHECK(k.vertex_id("B") == bb);
    CHECK_THROWS_AS(k.vertex_id("Q"), StructuralError);
    CHECK_FALSE(k.find_vertex("Q"));
}

TEST_CASE("empty complex")
{
    GeometricComplex k;
    CHECK(k.empty());
    CHECK(k.dimension() == -1);
    CHECK(k.f_vector().empty());
    CHECK(k.maximal().empty());
}

TEST_CASE("lookup by labels and barycenter")
{
    const GeometricComplex k = fixtures::triangle();
    const Simplex abc = k.simplex_from_labels({"C", "A", "B"});
    CHECK(k.contains(abc));
    CHECK(k.index_of(abc).has_value());
    CHECK(k.labels_of(abc) == std::vector<std::string>{"A", "B", "C"});
    CHECK(k.barycenter(abc) == Point{Rational(2, 5), Rational(3, 10)});
    CHECK(k.name_of(k.simplex_from_labels({"B"})) == "B");
    CHECK_THROWS_AS(k.simplex_from_labels({"A", "X"}), StructuralError);
}

TEST_CASE("maximal simplices of a complex with a dangling edge")
{
    const GeometricComplex k = fixtures::triangle_with_tail();
    std::vector<std::string> names;
    for (auto i : k.maximal())
        names.push_back(k.name_of(k.simplex(i)));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"[v0,v1,v2]", "[v0,w]"});
}

TEST_CASE("barycentric coordinates")
{
    const GeometricComplex k = fixtures::triangle();
    const Simplex abc = k.simplex_from_labels({"A", "B", "C"});
    const Simplex ab = k.simplex_from_labels({"A", "B"});

    auto c = barycentric_coordinates(k, abc, k.barycenter(abc));
    REQUIRE(c);
    for (const auto& w : c->weights)
        CHECK(w == Rational(1, 3));
    CHECK(c->in_relative_interior());

    auto d = barycentric_coordinates(k, ab, Point{Rational(1, 2), 0});
    REQUIRE(d);
    CHECK(d->in_relative_interior());
    CHECK(in_relative_interior(k, ab, Point{Rational(1, 2), 0}));
    CHECK_FALSE(in_relative_interior(k, abc, Point{Rational(1, 2), 0}));
    CHECK(in_closed_simplex(k, abc, Point{Rational(1, 2), 0}));
    CHECK_FALSE(barycentric_coordinates(k, ab, Point{Rational(1, 2), 1}));
    CHECK_FALSE(in_closed_simplex(k, ab, Point{2, 0}));
    CHECK_THROWS_AS(barycentric_coordinates(k, ab, Point{1, 2, 3}), StructuralError);
}

TEST_CASE("barycentric coordinates reconstruct the point")
{
    const GeometricComplex k = fixtures::twin_tetrahedra(13);
    for (auto i : k.maximal()) {
        const Simplex& s = k.simplex(i);
        auto pts = k.points_of(s);
        const Point x = k.barycenter(s);
        auto c = barycentric_coordinates(k, s, x);
        REQUIRE(c);
        CHECK(affine_combination(pts, c->weights) == x);
    }
}
