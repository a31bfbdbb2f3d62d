#pragma once

#include "simplicia/complex.hpp"
#include "simplicia/subdivision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace simplicia {

/// Outcome of an oracle check. `failures` is empty iff the check passed;
/// `notes` records scope limits (caps, skipped directions).
struct Verdict
{
    std::string check;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    std::string to_string() const;
};

namespace oracle {

/// Cofactor expansion along the first row. Independent of the elimination
/// routines used by the engine; intended for the small matrices of volume
/// checks.
Rational laplace_determinant(const std::vector<std::vector<Rational>>& m);

/// Coordinate axes onto which the simplex projects injectively: the first
/// k-subset (lexicographically) with a nonzero k x k minor of the edge
/// matrix. Empty for a vertex; nullopt when the simplex is degenerate.
std::optional<std::vector<std::size_t>> projection_axes(std::span<const Point> points);

/// |det| of the edge matrix restricted to `axes`; proportional to the
/// k-volume of any k-simplex in the same affine k-plane.
Rational projected_volume(std::span<const Point> points, const std::vector<std::size_t>& axes);

/// Barycentric weights by Cramer's rule on the projection, checked against
/// the full coordinates; nullopt off the affine hull.
std::optional<std::vector<Rational>> cramer_coordinates(std::span<const Point> points, const Point& x);

/// Carrier found by scanning every maximal simplex (with a bounding-box
/// filter). Throws std::logic_error when two maximal simplices disagree,
/// which cannot happen in a valid complex.
std::optional<Simplex> scan_carrier(const GeometricComplex& k, const Point& x);

/// Number of simplices of k whose relative interior contains x, by
/// exhaustive scan over all simplices.
std::size_t interior_count(const GeometricComplex& k, const Point& x);

/// Deterministic probe points for comparing |a| and |b|: barycenters of all
/// simplices of both, then, for every simplex t and every vertex v after
/// t's vertices that is joined by an edge to each of them while t + v is not
/// a simplex, the midpoint of v and the barycenter of t. Those land inside
/// simplices whose edges are all present but which are themselves missing.
/// When `samples` > 0 and fewer than all, an evenly strided subset is used.
std::vector<Point> probe_points(const GeometricComplex& a, const GeometricComplex& b, long samples);

}  // namespace oracle

/// |L| = |K|: (a) every maximal k-simplex of K is exactly covered, by
/// volume, by the k-simplices of L inside it and every maximal simplex of L
/// lies in a simplex of K of its own dimension; (b) every probe point lies
/// in both realizations or in neither.
Verdict realization_equal(const GeometricComplex& l, const GeometricComplex& k, long samples = 0);

/// is_subdivision(Bsd^j(K), Bsd^i(K)) for every 0 <= i < j <= chain_len.
/// Throws std::invalid_argument when chain_len < 2.
Verdict check_transitivity(const GeometricComplex& k, int chain_len);
/// The same over an explicit chain, each entry claimed to subdivide the
/// previous one.
Verdict check_transitivity_chain(const std::vector<GeometricComplex>& chain);

/// Star inclusion for K' = Bsd(K) with the engine's witness.
Verdict check_star_lemma(const GeometricComplex& k);
/// Star inclusion for a given fine complex and witness. For every vertex w
/// of `fine`: the engine's answer must equal the vertex set of the scanned
/// carrier of w, and a direct probe test (w, the barycenter of each piece of
/// St(w) and its midpoint toward w) must include exactly those vertices.
/// The direct test runs for dim K <= 2; above that only the carrier
/// comparison runs and a note says so.
Verdict check_star_lemma(const GeometricComplex& k, const GeometricComplex& fine, const SubdivisionWitness& witness);

/// Every covering set's projected volumes (Laplace determinants) sum exactly
/// to the projected volume of its coarse simplex, for simplices of every
/// dimension; every refinement target contains its fine simplex.
Verdict witness_volume_selftest(const GeometricComplex& fine, const GeometricComplex& coarse,
                                const SubdivisionWitness& witness);

}  // namespace simplicia
