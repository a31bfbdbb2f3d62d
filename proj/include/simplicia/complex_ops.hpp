#pragma once

#include "simplicia/complex.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace simplicia {

enum class ViolationKind { FaceClosure, AffineDependence, ImproperIntersection };

std::string to_string(ViolationKind kind);

struct Violation
{
    ViolationKind kind;
    /// Names of the simplices involved ("[A,B,C]"), in a stable order.
    std::vector<std::string> simplices;
    std::string message;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    std::size_t count(ViolationKind kind) const;
    std::string to_string() const;
};

/// Lists face-closure gaps, affinely dependent simplices and improperly
/// intersecting pairs of maximal simplices. Properness is decided by one exact
/// linear program per pair whose bounding boxes meet, so the cost is roughly
/// quadratic in the number of locally overlapping maximal simplices; it is
/// skipped when some simplex is affinely dependent.
ValidationReport validate_complex(const GeometricComplex& k);

/// True when |s| and |t| meet exactly in the realization of their common
/// face (possibly empty). Both simplices must be affinely independent.
bool intersects_properly(const GeometricComplex& k, const Simplex& s, const Simplex& t);

/// True when the relative interiors of s and t share a point.
bool interiors_intersect(const GeometricComplex& k, const Simplex& s, const Simplex& t);

/// Simplices satisfying `keep`, over a vertex table trimmed to the vertices
/// they use (labels and points preserved).
GeometricComplex subcomplex_where(const GeometricComplex& k, const std::function<bool(const Simplex&)>& keep);

/// All simplices of dimension <= p.
GeometricComplex skeleton(const GeometricComplex& k, int p);

/// The simplex whose relative interior contains x, or nullopt when x lies
/// outside |k|. Throws StructuralError when x has the wrong dimension or a
/// maximal simplex is degenerate.
std::optional<Simplex> carrier(const GeometricComplex& k, const Point& x);

/// Intersection of face-closed selections of simplices of k. An empty list
/// of selections yields k itself. Throws StructuralError when a selection is
/// not face-closed or names a simplex outside k.
GeometricComplex intersect_subcomplexes(const GeometricComplex& k, const std::vector<std::vector<Simplex>>& selections);

/// Raised by union_complexes when two parts do not meet in a common subcomplex.
class IncompatibleUnion : public std::runtime_error
{
public:
    IncompatibleUnion(std::string first, std::string second);
    const std::string& first() const { return first_; }
    const std::string& second() const { return second_; }

private:
    std::string first_;
    std::string second_;
};

/// Union of complexes whose vertices are identified by label. Every pair of
/// parts must intersect in the realization of a common subcomplex; this is
/// verified exactly on all cross pairs of maximal simplices.
GeometricComplex union_complexes(const std::vector<GeometricComplex>& parts);

/// Each simplex as the sorted list of its vertex points.
using GeometricKey = std::set<std::vector<Point>>;
GeometricKey geometric_key(const GeometricComplex& k);

/// Equality of realized simplices, independent of labels and handles.
bool geometrically_equal(const GeometricComplex& a, const GeometricComplex& b);

/// Each simplex as its sorted label list.
std::set<std::vector<std::string>> label_key(const GeometricComplex& k);

/// Simplices of k containing vertex v.
std::vector<Simplex> simplices_containing(const GeometricComplex& k, VertexId v);

}  // namespace simplicia
