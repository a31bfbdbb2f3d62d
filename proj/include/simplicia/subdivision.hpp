#pragma once

#include "simplicia/complex.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace simplicia {

/// Carrier map from a fine complex into a coarse one.
///
/// `refinement[i]` is the index (into coarse.simplices()) of the smallest
/// coarse simplex containing fine simplex i. `covering[j]` lists the fine
/// simplices of the same dimension as coarse simplex j that it carries; for a
/// genuine subdivision their union is exactly coarse simplex j.
struct SubdivisionWitness
{
    std::vector<std::size_t> refinement;
    std::vector<std::vector<std::size_t>> covering;

    /// Rebuilds `covering` from `refinement` and the two complexes.
    static SubdivisionWitness from_refinement(const GeometricComplex& fine, const GeometricComplex& coarse,
                                              std::vector<std::size_t> refinement);

    static SubdivisionWitness identity(const GeometricComplex& k);
};

/// Witness for fine -> coarse given witnesses fine -> middle and middle -> coarse.
/// This is the constructive content of transitivity: carriers compose.
SubdivisionWitness compose(const GeometricComplex& fine, const GeometricComplex& coarse,
                           const SubdivisionWitness& fine_to_middle, const SubdivisionWitness& middle_to_coarse);

/// Why a candidate fails to subdivide a complex.
struct Refutation
{
    /// 1: a fine simplex lies in no coarse simplex. 2: a coarse simplex is
    /// not the union of the fine simplices it carries.
    int condition = 0;
    std::string simplex;
    std::string detail;
    /// Condition 2 only: covered share of the coarse simplex's volume.
    Rational covered_fraction;
    /// Condition 2 only: squared volume of the uncovered part.
    Rational deficit_volume_squared;
};

using SubdivisionCheck = std::variant<SubdivisionWitness, Refutation>;

/// Chooses the apex w_sigma used to star each simplex.
struct ApexChooser
{
    /// Prefix of apex labels: tag "b" labels the apex of [A,B,C] "b(A,B,C)".
    std::string tag;
    std::function<Point(const GeometricComplex&, const Simplex&)> rule;

    static ApexChooser barycenter();
};

class ConeDegenerate : public std::runtime_error
{
public:
    explicit ConeDegenerate(std::string simplex);
    const std::string& simplex() const { return simplex_; }

private:
    std::string simplex_;
};

class ApexNotInterior : public std::runtime_error
{
public:
    explicit ApexNotInterior(std::string simplex);
    const std::string& simplex() const { return simplex_; }

private:
    std::string simplex_;
};

/// Deterministic label for a point generated from a face: tag + "(" + sorted
/// labels + ")". Labels longer than 48 characters are replaced by
/// tag + "#" + 16 hex digits of their FNV-1a hash, keeping iterated
/// subdivisions compact.
std::string derived_label(const std::string& tag, std::vector<std::string> labels);

/// Cone w * boundary: the boundary complex, the apex, and [w u tau] for every
/// tau in boundary. Throws ConeDegenerate when w u tau is affinely dependent.
GeometricComplex star_from_point(const Point& w, const GeometricComplex& boundary, const std::string& apex_label = "w");

struct Subdivision
{
    GeometricComplex complex;
    SubdivisionWitness witness;  // complex -> the input complex
};

/// Builds a subdivision skeleton by skeleton: the stage-p complex is
/// restricted to the boundary of each (p+1)-simplex by exact containment and
/// coned from the chooser's apex. Throws ApexNotInterior when the chooser
/// leaves the relative interior.
Subdivision subdivide_skeletonwise(const GeometricComplex& k, const ApexChooser& chooser);

/// First barycentric subdivision by starring each simplex from its
/// barycenter over the pieces already built on its proper faces.
Subdivision barycentric_subdivide(const GeometricComplex& k);

/// n-fold iterate; n = 0 returns k.
GeometricComplex barycentric_subdivide_n(const GeometricComplex& k, int n);

/// n-fold iterate with the composed witness back to k.
Subdivision barycentric_subdivide_n_witnessed(const GeometricComplex& k, int n);

/// A strictly decreasing chain of faces, each a proper face of its predecessor.
struct Flag
{
    std::vector<Simplex> chain;
};

bool is_flag(const GeometricComplex& k, const Flag& flag);

/// Every flag of k (every chain, of every length, starting at every simplex).
std::vector<Flag> enumerate_flags(const GeometricComplex& k);

/// The complex of simplices [b_s1, ..., b_sn] over all flags s1 > ... > sn of k.
GeometricComplex barycentric_flags(const GeometricComplex& k);

/// Fine simplices lying in |coarse_sub|, where coarse_sub is a subcomplex of
/// coarse (matched by vertex position) and fine subdivides coarse. When no
/// witness is given one is computed with is_subdivision; a refuted pair or a
/// non-subcomplex throws StructuralError.
GeometricComplex induced_subdivision(const GeometricComplex& fine, const GeometricComplex& coarse_sub,
                                     const GeometricComplex& coarse,
                                     const std::optional<SubdivisionWitness>& witness = std::nullopt);

/// Decides whether fine subdivides coarse. Condition 1 is checked through the
/// carriers of the fine vertices; condition 2 by exact volume accounting in
/// barycentric coordinates of each coarse simplex (valid because the fine
/// simplices of a valid complex have disjoint interiors). Throws
/// StructuralError on an ambient-dimension mismatch.
SubdivisionCheck is_subdivision(const GeometricComplex& fine, const GeometricComplex& coarse);

/// Squared k-volume of a k-simplex (Gram determinant over (k!)^2).
Rational squared_volume(const GeometricComplex& k, const Simplex& s);

}  // namespace simplicia
