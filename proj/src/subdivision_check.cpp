#include "simplicia/complex_ops.hpp"
#include "simplicia/exact_linalg.hpp"
#include "simplicia/subdivision.hpp"

#include <algorithm>

namespace simplicia {

Rational squared_volume(const GeometricComplex& k, const Simplex& s)
{
    const auto pts = k.points_of(s);
    const std::size_t n = pts.size() - 1;
    if (n == 0)
        return 1;
    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational dot = 0;
            for (std::size_t a = 0; a < k.ambient_dim(); ++a)
                dot += (pts[i + 1][a] - pts[0][a]) * (pts[j + 1][a] - pts[0][a]);
            gram(i, j) = dot;
        }
    }
    Rational factorial = 1;
    for (std::size_t i = 2; i <= n; ++i)
        factorial *= Rational(static_cast<long>(i));
    return determinant(std::move(gram)) / (factorial * factorial);
}

SubdivisionCheck is_subdivision(const GeometricComplex& fine, const GeometricComplex& coarse)
{
    if (fine.ambient_dim() != coarse.ambient_dim())
        throw StructuralError("is_subdivision: ambient dimensions differ");

    // Condition 1: the carriers of a fine simplex's vertices must span a
    // coarse simplex; that simplex then contains it and is its carrier.
    std::vector<std::optional<Simplex>> vertex_carrier(fine.vertex_count());
    std::vector<char> located(fine.vertex_count(), 0);
    std::vector<std::size_t> refinement(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const Simplex& tau = fine.simplex(i);
        Simplex::Storage span;
        for (VertexId u : tau) {
            if (!located[u]) {
                vertex_carrier[u] = carrier(coarse, fine.point(u));
                located[u] = 1;
            }
            if (!vertex_carrier[u]) {
                return Refutation{1, fine.name_of(tau),
                                  "vertex " + fine.label(u) + " lies outside the coarse realization", 0, 0};
            }
            for (VertexId v : *vertex_carrier[u]) {
                if (std::find(span.begin(), span.end(), v) == span.end())
                    span.push_back(v);
            }
        }
        auto index = coarse.index_of(Simplex(std::move(span)));
        if (!index) {
            return Refutation{1, fine.name_of(tau), "no coarse simplex contains " + fine.name_of(tau), 0, 0};
        }
        refinement[i] = *index;
    }
    auto witness = SubdivisionWitness::from_refinement(fine, coarse, std::move(refinement));

    // Condition 2: fine simplices carried by sigma with sigma's dimension have
    // disjoint interiors, so they cover sigma iff their volume shares sum to 1.
    // The share of tau is |det| of the barycentric coordinates of its vertices.
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        const Simplex& sigma = coarse.simplex(j);
        const auto sigma_points = coarse.points_of(sigma);
        const AffineFrame frame(sigma_points);
        Rational covered = 0;
        for (std::size_t i : witness.covering[j]) {
            const Simplex& tau = fine.simplex(i);
            RationalMatrix weights(tau.size(), tau.size());
            for (std::size_t r = 0; r < tau.size(); ++r) {
                auto w = frame.coordinates(fine.point(tau[r]));
                for (std::size_t c = 0; c < tau.size(); ++c)
                    weights(r, c) = (*w)[c];
            }
            covered += abs(determinant(std::move(weights)));
        }
        if (covered != 1) {
            Rational gap = 1 - covered;
            Rational deficit = gap * gap * squared_volume(coarse, sigma);
            std::string detail = "fine simplices carried by " + coarse.name_of(sigma) + " cover a share " +
                                 to_string(covered) + " of its volume";
            return Refutation{2, coarse.name_of(sigma), detail, covered, deficit};
        }
    }
    return witness;
}

}  // namespace simplicia
