#include "simplicia/stars.hpp"

#include "simplicia/complex_ops.hpp"

namespace simplicia {

OpenStar open_star(const GeometricComplex& k, VertexId v)
{
    if (v >= k.vertex_count() || !k.contains(Simplex{v}))
        throw StructuralError("open_star: vertex " + std::to_string(v) + " is not in the complex");
    return {v, simplices_containing(k, v)};
}

OpenStar open_star(const GeometricComplex& k, std::string_view label)
{
    return open_star(k, k.vertex_id(label));
}

bool star_contains(const GeometricComplex& k, const OpenStar& star, const Point& x)
{
    auto c = carrier(k, x);
    return c && c->contains(star.center);
}

bool star_contains_by_definition(const GeometricComplex& k, const OpenStar& star, const Point& x)
{
    for (const auto& piece : star.pieces) {
        if (in_relative_interior(k, piece, x))
            return true;
    }
    return false;
}

std::set<VertexId> star_inclusion_vertices(VertexId w, const GeometricComplex& fine, const GeometricComplex& coarse,
                                           const SubdivisionWitness& witness)
{
    if (witness.refinement.size() != fine.size() || witness.covering.size() != coarse.size())
        throw std::invalid_argument("star_inclusion_vertices: witness does not belong to these complexes");
    auto index = fine.index_of(Simplex{w});
    if (!index)
        throw StructuralError("star_inclusion_vertices: vertex " + std::to_string(w) + " is not in the fine complex");
    const Simplex& host = coarse.simplex(witness.refinement[*index]);
    return {host.begin(), host.end()};
}

std::vector<Point> star_probe_points(const GeometricComplex& fine, VertexId w)
{
    std::vector<Point> probes;
    const Point& center = fine.point(w);
    for (const auto& piece : simplices_containing(fine, w)) {
        Point b = fine.barycenter(piece);
        if (piece.dim() > 0)
            probes.push_back(midpoint(b, center));
        probes.push_back(std::move(b));
    }
    return probes;
}

std::set<VertexId> star_inclusion_by_probes(VertexId w, const GeometricComplex& fine, const GeometricComplex& coarse)
{
    const auto probes = star_probe_points(fine, w);
    std::set<VertexId> out;
    for (VertexId v = 0; v < coarse.vertex_count(); ++v) {
        if (!coarse.contains(Simplex{v}))
            continue;
        const OpenStar star = open_star(coarse, v);
        bool included = true;
        for (const auto& x : probes) {
            if (!star_contains(coarse, star, x)) {
                included = false;
                break;
            }
        }
        if (included)
            out.insert(v);
    }
    return out;
}

}  // namespace simplicia
