#include "helpers.hpp"

#include "simplicia/complex_ops.hpp"
#include "simplicia/corpus.hpp"
#include "simplicia/subdivision.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace simplicia;
using testing::complex_of;

namespace {

// Chains of nonempty subsets of an n-element set, by length. A chain of
// length j is a (j-1)-simplex of the barycentric subdivision of the simplex.
std::vector<std::size_t> chain_counts(int n)
{
    const unsigned full = (1u << n) - 1;
    // ending[mask][j]: chains of length j whose largest element is mask
    std::vector<std::vector<std::size_t>> ending(full + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<unsigned> masks(full);
    std::iota(masks.begin(), masks.end(), 1u);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::vector<std::size_t> out(n, 0);
    for (unsigned m : masks) {
        ending[m][1] = 1;
        for (unsigned sub = (m - 1) & m; sub; sub = (sub - 1) & m)
            for (int j = 1; j < n; ++j)
                ending[m][j + 1] += ending[sub][j];
        for (int j = 1; j <= n; ++j)
            out[j - 1] += ending[m][j];
    }
    return out;
}

std::size_t permutations(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do
        ++count;
    while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::size_t count_dim(const GeometricComplex& k, int d)
{
    auto f = k.f_vector();
    return d < static_cast<int>(f.size()) ? f[d] : 0;
}

Rational shoelace(const Point& a, const Point& b, const Point& c)
{
    Rational twice = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return abs(twice) / 2;
}

}  // namespace

TEST_CASE("barycentric subdivision of a simplex has the chain f-vector")
{
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        const auto bsd = barycentric_subdivide(fixtures::standard_simplex(n)).complex;
        CHECK(bsd.f_vector() == chain_counts(n + 1));
        CHECK(count_dim(bsd, n) == permutations(n + 1));
        CHECK(validate_complex(bsd).valid());
    }
}

TEST_CASE("iterated subdivision counts")
{
    const auto tri = fixtures::triangle();
    CHECK(count_dim(barycentric_subdivide_n(tri, 1), 2) == 6);
    CHECK(count_dim(barycentric_subdivide_n(tri, 2), 2) == 36);
    CHECK(count_dim(barycentric_subdivide_n(tri, 3), 2) == 216);
    // 2745 = number of chains in the face poset of Bsd(simplex-3)
    CHECK(barycentric_subdivide_n(fixtures::standard_simplex(3), 2).size() == 2745);
    CHECK(label_key(barycentric_subdivide_n(tri, 0)) == label_key(tri));
    CHECK_THROWS(barycentric_subdivide_n(tri, -1));
}

TEST_CASE("second subdivision of simplex-3 matches the chain count of the first")
{
    const auto bsd = barycentric_subdivide(fixtures::standard_simplex(3)).complex;
    std::size_t chains = 0;
    for (const auto& f : enumerate_flags(bsd))
        chains += !f.chain.empty();
    CHECK(chains == 2745);
}

TEST_CASE("the dangling edge is halved by each subdivision")
{
    const auto k = fixtures::triangle_with_tail();
    for (int m = 1; m <= 2; ++m) {
        const auto fine = barycentric_subdivide_n_witnessed(k, m);
        const Simplex edge = k.simplex_from_labels({"v0", "w"});
        const auto j = *k.index_of(edge);
        std::size_t edges = 0;
        for (auto i : fine.witness.covering[j])
            edges += fine.complex.simplex(i).dim() == 1;
        CHECK(edges == (m == 1 ? 2u : 4u));
    }
}

TEST_CASE("three constructions agree geometrically")
{
    for (const auto& f : shipped_corpus()) {
        if (f.complex.dimension() > 3)
            continue;
        CAPTURE(f.name);
        const auto bsd = barycentric_subdivide(f.complex).complex;
        const auto flags = barycentric_flags(f.complex);
        const auto skel = subdivide_skeletonwise(f.complex, ApexChooser::barycenter()).complex;
        CHECK(geometric_key(bsd) == geometric_key(flags));
        CHECK(geometric_key(bsd) == geometric_key(skel));
    }
}

TEST_CASE("flags")
{
    const auto k = fixtures::triangle();
    const Simplex abc = k.simplex_from_labels({"A", "B", "C"});
    const Simplex ab = k.simplex_from_labels({"A", "B"});
    const Simplex a = k.simplex_from_labels({"A"});
    const Simplex c = k.simplex_from_labels({"C"});
    CHECK(is_flag(k, Flag{{abc, ab, a}}));
    CHECK(is_flag(k, Flag{{ab}}));
    CHECK_FALSE(is_flag(k, Flag{{ab, c}}));
    CHECK_FALSE(is_flag(k, Flag{{a, ab}}));
    CHECK_FALSE(is_flag(k, Flag{{ab, ab}}));
    CHECK(enumerate_flags(k).size() == barycentric_subdivide(k).complex.size());
    for (const auto& f : enumerate_flags(k))
        CHECK(is_flag(k, f));
}

TEST_CASE("derived labels")
{
    CHECK(derived_label("b", {"C", "A", "B"}) == "b(A,B,C)");
    CHECK(derived_label("w", {"x"}) == "w(x)");
    std::vector<std::string> many;
    for (int i = 0; i < 12; ++i)
        many.push_back("vertex" + std::to_string(i));
    const auto l = derived_label("b", many);
    CHECK(l.size() == 18);
    CHECK(l.starts_with("b#"));
    CHECK(l == derived_label("b", std::vector<std::string>(many.rbegin(), many.rend())));
    many.back() = "vertex99";
    CHECK(l != derived_label("b", many));
}

TEST_CASE("coning a triangle boundary from an interior point")
{
    const auto k = fixtures::star_triangle();
    const Point d = k.barycenter(k.simplex_from_labels({"A", "B", "C"}));
    const auto cone = star_from_point(d, skeleton(k, 1), "D");
    CHECK(cone.f_vector() == std::vector<std::size_t>{4, 6, 3});
    CHECK(geometric_key(cone) == geometric_key(fixtures::coned_triangle()));
    CHECK_THROWS_AS(star_from_point(Point{Rational(1, 2), 0}, skeleton(k, 1)), ConeDegenerate);
    CHECK_THROWS_AS(star_from_point(Point{1}, skeleton(k, 1)), StructuralError);
}

TEST_CASE("general starring with a non-barycentric apex is a subdivision")
{
    const ApexChooser skewed{"s", [](const GeometricComplex& k, const Simplex& s) {
                                 auto pts = k.points_of(s);
                                 std::vector<Rational> w(pts.size());
                                 Rational total = 0;
                                 for (std::size_t i = 0; i < w.size(); ++i)
                                     total += w[i] = Rational(static_cast<long>(i) + 1);
                                 for (auto& x : w)
                                     x /= total;
                                 return affine_combination(pts, w);
                             }};
    for (const char* name : {"triangle", "simplex-3", "triangle-with-tail", "random-strip"}) {
        CAPTURE(name);
        const auto k = find_fixture(name).complex;
        const auto s = subdivide_skeletonwise(k, skewed);
        CHECK(validate_complex(s.complex).valid());
        auto r = is_subdivision(s.complex, k);
        REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
        CHECK(std::get<SubdivisionWitness>(r).refinement == s.witness.refinement);
        CHECK_FALSE(geometrically_equal(s.complex, barycentric_subdivide(k).complex));
    }
}

TEST_CASE("an apex outside the relative interior is rejected")
{
    const ApexChooser vertex{"x", [](const GeometricComplex& k, const Simplex& s) { return k.point(s[0]); }};
    CHECK_THROWS_AS(subdivide_skeletonwise(fixtures::triangle(), vertex), ApexNotInterior);
}

TEST_CASE("midpoint split subdivides the triangle")
{
    const auto k = fixtures::triangle();
    const auto fine = fixtures::triangle_split();
    auto r = is_subdivision(fine, k);
    REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
    const auto& w = std::get<SubdivisionWitness>(r);
    const Simplex ab = k.simplex_from_labels({"A", "B"});
    CHECK(fine.name_of(fine.simplex(0)) == "A");
    CHECK(k.simplex(w.refinement[*fine.index_of(fine.simplex_from_labels({"D"}))]) == ab);
    CHECK(w.covering[*k.index_of(ab)].size() == 2);
    CHECK(w.covering[*k.index_of(k.simplex_from_labels({"A", "B", "C"}))].size() == 2);
}

TEST_CASE("a missing triangle leaves an exact volume deficit")
{
    const auto k = fixtures::triangle();
    const auto fine = complex_of(R"({"ambient_dim":2,
        "vertices":{"A":["0","0"],"B":["1","0"],"C":["1/5","9/10"],"D":["1/2","0"]},
        "simplices":[["A","D","C"],["B","D"],["B","C"]]})");
    auto r = is_subdivision(fine, k);
    REQUIRE(std::holds_alternative<Refutation>(r));
    const auto& why = std::get<Refutation>(r);
    CHECK(why.condition == 2);
    CHECK(why.simplex == "[A,B,C]");
    const Point a{0, 0}, b{1, 0}, c{Rational(1, 5), Rational(9, 10)}, d{Rational(1, 2), 0};
    const Rational missing = shoelace(b, c, d);
    CHECK(why.deficit_volume_squared == missing * missing);
    CHECK(why.covered_fraction == shoelace(a, d, c) / shoelace(a, b, c));
}

TEST_CASE("a vertex outside the coarse complex violates containment")
{
    const auto k = fixtures::triangle();
    const auto r = is_subdivision(fixtures::coned_triangle(), k);
    REQUIRE(std::holds_alternative<Refutation>(r));
    CHECK(std::get<Refutation>(r).condition == 1);
    CHECK_THROWS_AS(is_subdivision(fixtures::standard_simplex(3), k), StructuralError);
}

TEST_CASE("subdivision is reflexive and the identity witness is trivial")
{
    for (const auto& f : shipped_corpus()) {
        CAPTURE(f.name);
        auto r = is_subdivision(f.complex, f.complex);
        REQUIRE(std::holds_alternative<SubdivisionWitness>(r));
        CHECK(std::get<SubdivisionWitness>(r).refinement == SubdivisionWitness::identity(f.complex).refinement);
    }
}

TEST_CASE("composed witnesses equal direct witnesses")
{
    for (const char* name : {"triangle-with-tail", "simplex-2", "random-polyline", "twin-tetrahedra"}) {
        CAPTURE(name);
        const auto k = find_fixture(name).complex;
        const auto one = barycentric_subdivide(k);
        const auto two = barycentric_subdivide(one.complex);
        const auto composed = compose(two.complex, k, two.witness, one.witness);
        auto direct = is_subdivision(two.complex, k);
        REQUIRE(std::holds_alternative<SubdivisionWitness>(direct));
        CHECK(composed.refinement == std::get<SubdivisionWitness>(direct).refinement);
        CHECK(composed.covering == std::get<SubdivisionWitness>(direct).covering);
        CHECK(barycentric_subdivide_n_witnessed(k, 2).witness.refinement == composed.refinement);
        const auto rebuilt = SubdivisionWitness::from_refinement(two.complex, k, composed.refinement);
        CHECK(rebuilt.covering == composed.covering);
    }
}

TEST_CASE("induced subdivision of an edge")
{
    const auto k = fixtures::triangle();
    const auto fine = fixtures::triangle_split();
    const auto sub = fixtures::edge_ab();
    const auto induced = induced_subdivision(fine, sub, k);
    std::set<std::string> got;
    for (const auto& s : induced.simplices())
        got.insert(induced.name_of(s));
    CHECK(got == std::set<std::string>{"A", "B", "D", "[A,D]", "[B,D]"});
    CHECK(geometric_key(induced) == geometric_key(fixtures::edge_ab_split()));

    auto off_edge = complex_of(R"({"ambient_dim":2,"vertices":{"A":["0","0"],"Z":["1","1"]},"simplices":[["A","Z"]]})");
    CHECK_THROWS_AS(induced_subdivision(fine, off_edge, k), StructuralError);
    CHECK_THROWS_AS(induced_subdivision(fixtures::coned_triangle(), sub, k), StructuralError);
}

TEST_CASE("induced subdivision of a face of Bsd")
{
    const auto k = fixtures::standard_simplex(3);
    const auto bsd = barycentric_subdivide(k);
    const auto face = subcomplex_where(k, [&](const Simplex& s) { return !s.contains(k.vertex_id("v3")); });
    const auto induced = induced_subdivision(bsd.complex, face, k, bsd.witness);
    CHECK(geometric_key(induced) == geometric_key(barycentric_subdivide(face).complex));
}

TEST_CASE("squared volumes")
{
    for (int n = 1; n <= 4; ++n) {
        const auto k = fixtures::standard_simplex(n);
        Rational factorial = 1;
        for (int i = 2; i <= n; ++i)
            factorial *= i;
        CHECK(squared_volume(k, k.simplex(k.maximal()[0])) == 1 / (factorial * factorial));
    }
    const auto seg = fixtures::segment();
    CHECK(squared_volume(seg, seg.simplex(seg.maximal()[0])) == 9);
    const auto v = seg.simplex_from_labels({"A"});
    CHECK(squared_volume(seg, v) == 1);
}
