#include "simplicia/subdivision.hpp"

#include "simplicia/complex_ops.hpp"
#include "simplicia/exact_linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace simplicia {

SubdivisionWitness SubdivisionWitness::from_refinement(const GeometricComplex& fine, const GeometricComplex& coarse,
                                                       std::vector<std::size_t> refinement)
{
    if (refinement.size() != fine.size())
        throw std::invalid_argument("refinement map does not cover the fine complex");
    SubdivisionWitness w;
    w.covering.resize(coarse.size());
    for (std::size_t i = 0; i < refinement.size(); ++i) {
        const std::size_t j = refinement[i];
        if (fine.simplex(i).dim() == coarse.simplex(j).dim())
            w.covering[j].push_back(i);
    }
    w.refinement = std::move(refinement);
    return w;
}

SubdivisionWitness SubdivisionWitness::identity(const GeometricComplex& k)
{
    std::vector<std::size_t> refinement(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
        refinement[i] = i;
    return from_refinement(k, k, std::move(refinement));
}

SubdivisionWitness compose(const GeometricComplex& fine, const GeometricComplex& coarse,
                           const SubdivisionWitness& fine_to_middle, const SubdivisionWitness& middle_to_coarse)
{
    std::vector<std::size_t> refinement(fine_to_middle.refinement.size());
    for (std::size_t i = 0; i < refinement.size(); ++i)
        refinement[i] = middle_to_coarse.refinement.at(fine_to_middle.refinement[i]);
    return SubdivisionWitness::from_refinement(fine, coarse, std::move(refinement));
}

ApexChooser ApexChooser::barycenter()
{
    return {"b", [](const GeometricComplex& k, const Simplex& s) { return k.barycenter(s); }};
}

ConeDegenerate::ConeDegenerate(std::string simplex)
    : std::runtime_error("cone over " + simplex + " is affinely dependent"), simplex_(std::move(simplex))
{
}

ApexNotInterior::ApexNotInterior(std::string simplex)
    : std::runtime_error("apex chosen for " + simplex + " is not in its relative interior"),
      simplex_(std::move(simplex))
{
}

std::string derived_label(const std::string& tag, std::vector<std::string> labels)
{
    std::sort(labels.begin(), labels.end());
    std::string full = tag + "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            full += ',';
        full += labels[i];
    }
    full += ')';
    if (full.size() <= 48)
        return full;
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : full) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return tag + "#" + hex;
}

GeometricComplex star_from_point(const Point& w, const GeometricComplex& boundary, const std::string& apex_label)
{
    if (w.dim() != boundary.ambient_dim())
        throw StructuralError("apex dimension does not match the ambient dimension");
    ComplexBuilder b(boundary);
    const VertexId apex = b.add_vertex(apex_label, w);
    b.add_simplex(Simplex{apex});
    for (const auto& tau : boundary.simplices()) {
        if (tau.contains(apex))
            throw ConeDegenerate(boundary.name_of(tau));
        auto pts = boundary.points_of(tau);
        pts.push_back(w);
        if (!affinely_independent(pts))
            throw ConeDegenerate(boundary.name_of(tau));
        b.add_simplex(tau.with_vertex(apex));
    }
    return std::move(b).build();
}

namespace {

std::vector<std::size_t> refinement_of(const GeometricComplex& built, const std::vector<std::pair<Simplex, std::size_t>>& carriers)
{
    std::vector<std::size_t> refinement(built.size(), 0);
    for (const auto& [s, c] : carriers)
        refinement[*built.index_of(s)] = c;
    return refinement;
}

}  // namespace

Subdivision subdivide_skeletonwise(const GeometricComplex& k, const ApexChooser& chooser)
{
    ComplexBuilder b(k.ambient_dim());
    std::vector<std::pair<Simplex, std::size_t>> stage;  // simplex of L, carrier in k

    // L_0 = the 0-skeleton.
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        if (s.dim() != 0)
            continue;
        VertexId v = b.add_vertex(k.label(s[0]), k.point(s[0]));
        stage.emplace_back(Simplex{v}, i);
    }

    for (int p = 0; p < k.dimension(); ++p) {
        std::vector<std::pair<Simplex, std::size_t>> added;
        for (std::size_t i = 0; i < k.size(); ++i) {
            const Simplex& sigma = k.simplex(i);
            if (sigma.dim() != p + 1)
                continue;
            const auto sigma_points = k.points_of(sigma);
            AffineFrame frame;
            try {
                frame = AffineFrame(sigma_points);
            } catch (const std::invalid_argument&) {
                throw StructuralError("simplex " + k.name_of(sigma) + " is affinely dependent");
            }

            const Point apex_point = chooser.rule(k, sigma);
            auto apex_weights = frame.coordinates(apex_point);
            if (!apex_weights ||
                !std::all_of(apex_weights->begin(), apex_weights->end(), [](const Rational& q) { return sgn(q) > 0; }))
                throw ApexNotInterior(k.name_of(sigma));

            // Vertices of L_p on the boundary of sigma, with the set of sigma's
            // vertices whose weight vanishes (the facets containing them).
            std::vector<std::uint64_t> zero_mask(b.vertex_count(), 0);
            for (VertexId u = 0; u < b.vertex_count(); ++u) {
                auto weights = frame.coordinates(b.point(u));
                if (!weights)
                    continue;
                std::uint64_t mask = 0;
                bool inside = true;
                for (std::size_t j = 0; j < weights->size() && inside; ++j) {
                    int sign = sgn((*weights)[j]);
                    inside = sign >= 0;
                    if (sign == 0)
                        mask |= std::uint64_t{1} << j;
                }
                if (inside)
                    zero_mask[u] = mask;
            }

            const VertexId apex = b.add_vertex(derived_label(chooser.tag, k.labels_of(sigma)), apex_point);
            added.emplace_back(Simplex{apex}, i);
            for (const auto& [tau, tau_carrier] : stage) {
                std::uint64_t common = ~std::uint64_t{0};
                for (VertexId u : tau)
                    common &= zero_mask[u];
                if (common == 0)
                    continue;  // |tau| is not inside |Bd(sigma)|
                std::vector<Point> pts;
                for (VertexId u : tau)
                    pts.push_back(b.point(u));
                pts.push_back(apex_point);
                if (!affinely_independent(pts))
                    throw ConeDegenerate(k.name_of(sigma));
                added.emplace_back(tau.with_vertex(apex), i);
            }
        }
        stage.insert(stage.end(), added.begin(), added.end());
    }

    for (const auto& [s, c] : stage)
        b.add_simplex(s);
    GeometricComplex fine = std::move(b).build();
    auto refinement = refinement_of(fine, stage);
    auto witness = SubdivisionWitness::from_refinement(fine, k, std::move(refinement));
    return {std::move(fine), std::move(witness)};
}

GeometricComplex induced_subdivision(const GeometricComplex& fine, const GeometricComplex& coarse_sub,
                                     const GeometricComplex& coarse, const std::optional<SubdivisionWitness>& witness)
{
    if (coarse_sub.ambient_dim() != coarse.ambient_dim() || fine.ambient_dim() != coarse.ambient_dim())
        throw StructuralError("induced_subdivision: ambient dimensions differ");

    std::map<Point, VertexId> coarse_by_point;
    for (VertexId v = 0; v < coarse.vertex_count(); ++v)
        coarse_by_point.emplace(coarse.point(v), v);

    std::vector<char> selected(coarse.size(), 0);
    for (const auto& s : coarse_sub.simplices()) {
        Simplex::Storage ids;
        for (VertexId v : s) {
            auto it = coarse_by_point.find(coarse_sub.point(v));
            if (it == coarse_by_point.end())
                throw StructuralError("induced_subdivision: " + coarse_sub.name_of(s) + " is not a simplex of the complex");
            ids.push_back(it->second);
        }
        auto index = coarse.index_of(Simplex(std::move(ids)));
        if (!index)
            throw StructuralError("induced_subdivision: " + coarse_sub.name_of(s) + " is not a simplex of the complex");
        selected[*index] = 1;
    }

    SubdivisionWitness w;
    if (witness) {
        w = *witness;
    } else {
        auto check = is_subdivision(fine, coarse);
        if (auto* r = std::get_if<Refutation>(&check))
            throw StructuralError("induced_subdivision: not a subdivision (" + r->detail + ")");
        w = std::get<SubdivisionWitness>(std::move(check));
    }
    if (w.refinement.size() != fine.size())
        throw StructuralError("induced_subdivision: witness does not match the fine complex");

    std::vector<char> keep(fine.size(), 0);
    for (std::size_t i = 0; i < fine.size(); ++i)
        keep[i] = selected.at(w.refinement[i]);
    return subcomplex_where(fine, [&](const Simplex& s) { return keep[*fine.index_of(s)] != 0; });
}

}  // namespace simplicia
