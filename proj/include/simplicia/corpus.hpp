#pragma once

#include "simplicia/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simplicia {

/// A named test complex, optionally paired with a complex claimed to
/// subdivide it.
struct Fixture
{
    std::string name;
    GeometricComplex complex;
    std::optional<GeometricComplex> claimed_subdivision;
};

/// A deliberately broken fixture and the property-suite check expected to
/// reject it.
struct FaultyFixture
{
    Fixture fixture;
    std::string designated_property;
};

namespace fixtures {

/// A=(0,0), B=(1,0), C=(1/5,9/10).
GeometricComplex triangle();
/// The triangle split at D, the midpoint of [AB]: [ADC] and [BDC].
GeometricComplex triangle_split();
/// The edge [AB] of triangle() as a complex.
GeometricComplex edge_ab();
/// The edge [AB] split at D.
GeometricComplex edge_ab_split();
/// A=(0,0), B=(1,0), C=(1/4,17/20).
GeometricComplex star_triangle();
/// star_triangle() coned from its barycenter D: [DAB], [DBC], [DCA].
GeometricComplex coned_triangle();
/// A=(0,0), B=(3,0).
GeometricComplex segment();
/// v0=(0,0), v1=(1,0), v2=(1/4,17/20).
GeometricComplex barycenter_triangle();
/// Triangle v0=(0,0), v1=(1,0), v2=(1/5,17/20) with the edge [v0,w],
/// w=(-11/20,-1/20).
GeometricComplex triangle_with_tail();
/// The closed standard n-simplex: v0 at the origin, v_i = e_i.
GeometricComplex standard_simplex(int n);

/// Zigzag strip of 2*cells triangles with jittered rational vertices.
GeometricComplex random_strip(std::uint32_t seed, int cells = 4);
/// x-monotone polyline in the plane with random heights.
GeometricComplex random_polyline(std::uint32_t seed, int edges = 5);
/// Two tetrahedra sharing a face, apexes on opposite sides.
GeometricComplex twin_tetrahedra(std::uint32_t seed);

/// Two triangles sharing half an edge (an improper intersection).
GeometricComplex overlapping_triangles();

}  // namespace fixtures

/// Every shipped fixture, sorted by name. All of them are valid complexes.
std::vector<Fixture> shipped_corpus();

/// One broken fixture per checker of the property suite.
std::vector<FaultyFixture> faulty_corpus();

/// Throws std::out_of_range for an unknown name.
Fixture find_fixture(const std::string& name);

}  // namespace simplicia
