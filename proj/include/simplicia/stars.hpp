#pragma once

#include "simplicia/complex.hpp"
#include "simplicia/subdivision.hpp"

#include <set>
#include <vector>

namespace simplicia {

/// St(v, K): the union of the relative interiors of the simplices containing
/// v. It is open and not polyhedral, so it is represented by its generating
/// simplices and queried through membership predicates.
struct OpenStar
{
    VertexId center = 0;
    std::vector<Simplex> pieces;
};

/// Throws StructuralError for a vertex that is not in k.
OpenStar open_star(const GeometricComplex& k, VertexId v);
OpenStar open_star(const GeometricComplex& k, std::string_view label);

/// x is in St(v, K) iff v is a vertex of carrier(K, x).
bool star_contains(const GeometricComplex& k, const OpenStar& star, const Point& x);

/// Membership straight from the definition: x lies in the relative interior
/// of some piece.
bool star_contains_by_definition(const GeometricComplex& k, const OpenStar& star, const Point& x);

/// { v in Vert(coarse) : St(w, fine) is inside St(v, coarse) }, read off as
/// the vertex set of the carrier of w. Throws std::invalid_argument when the
/// witness does not belong to (fine, coarse).
std::set<VertexId> star_inclusion_vertices(VertexId w, const GeometricComplex& fine, const GeometricComplex& coarse,
                                           const SubdivisionWitness& witness);

/// Finite points of St(w, fine): w itself, the barycenter of each piece and
/// the midpoint between that barycenter and w.
std::vector<Point> star_probe_points(const GeometricComplex& fine, VertexId w);

/// The same vertex set computed by brute force: v qualifies when every probe
/// point of St(w, fine) lies in St(v, coarse).
std::set<VertexId> star_inclusion_by_probes(VertexId w, const GeometricComplex& fine, const GeometricComplex& coarse);

}  // namespace simplicia
