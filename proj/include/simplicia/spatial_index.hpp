#pragma once

#include "simplicia/complex.hpp"
#include "simplicia/exact_linalg.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace simplicia {

/// Uniform grid over the bounding boxes of a complex's maximal simplices.
/// Cell assignment uses exact rational floors, so a simplex whose closed
/// bounding box contains x is always among the candidates for x.
///
/// Each maximal simplex also carries a precomputed local affine frame so
/// barycentric coordinates cost one small matrix-vector product.
class SpatialIndex
{
public:
    /// Throws StructuralError when a maximal simplex is affinely dependent.
    explicit SpatialIndex(const GeometricComplex& k);

    /// Positions into k.maximal() whose bounding box contains x, ascending.
    std::vector<std::size_t> candidates(const Point& x) const;

    /// Pairs (i < j) of positions into k.maximal() whose closed bounding
    /// boxes intersect, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs() const;

    /// Barycentric coordinates of x relative to the maximal simplex at
    /// `position`, or nullopt when x is off its affine hull.
    std::optional<std::vector<Rational>> coordinates(std::size_t position, const Point& x) const;

    /// The simplex of k whose relative interior contains x (the carrier).
    std::optional<Simplex> locate(const Point& x) const;

    bool boxes_overlap(std::size_t a, std::size_t b) const;

private:
    struct Box
    {
        std::vector<Rational> lo;
        std::vector<Rational> hi;
    };

    std::vector<std::int64_t> cell_range(const Rational& lo, const Rational& hi, std::size_t axis) const;
    std::int64_t cell_of(const Rational& value, std::size_t axis) const;

    std::vector<Simplex> maximal_;
    std::size_t dim_ = 0;
    std::vector<Box> boxes_;
    std::vector<AffineFrame> frames_;
    std::vector<Rational> grid_lo_;
    std::vector<Rational> grid_span_;
    std::vector<std::int64_t> resolution_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace simplicia
