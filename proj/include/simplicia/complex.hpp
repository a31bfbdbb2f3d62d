#pragma once

#include "simplicia/point.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace simplicia {

/// Handle of a vertex inside one complex's vertex table. Handles are only
/// meaningful relative to the complex that issued them; labels and points
/// carry identity across complexes.
using VertexId = std::uint32_t;

/// Raised when an input violates a structural precondition (unknown vertex,
/// mismatched ambient dimension, non-face-closed selection, ...).
class StructuralError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free list of vertex handles; dimension = size - 1.
class Simplex
{
public:
    using Storage = boost::container::small_vector<VertexId, 5>;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);
    explicit Simplex(Storage vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    std::span<const VertexId> vertices() const { return {vertices_.data(), vertices_.size()}; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool contains(VertexId v) const;
    /// Vertex-set inclusion (improper faces included).
    bool is_face_of(const Simplex& other) const;

    /// Every nonempty vertex subset, the simplex itself included.
    std::vector<Simplex> faces() const;
    /// Faces of dimension dim() - 1.
    std::vector<Simplex> facets() const;
    Simplex with_vertex(VertexId v) const;
    Simplex without_vertex(VertexId v) const;

    /// Ordered by dimension, then lexicographically by handle.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices_ == b.vertices_; }

private:
    Storage vertices_;
};

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept;
};

struct Vertex
{
    std::string label;
    Point point;
};

class SpatialIndex;

/// A finite set of simplices over a labelled vertex table in a fixed ambient
/// dimension. Instances are immutable; use ComplexBuilder to make one.
///
/// Face closure, affine independence and properness are *not* enforced on
/// construction (validate_complex reports them); every constructive
/// operation of the library produces complexes satisfying all three.
class GeometricComplex
{
public:
    GeometricComplex();

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
    const Point& point(VertexId v) const { return vertices_.at(v).point; }
    const std::string& label(VertexId v) const { return vertices_.at(v).label; }
    std::span<const Vertex> vertices() const { return vertices_; }
    std::optional<VertexId> find_vertex(std::string_view label) const;
    /// Handle for `label`; throws StructuralError when absent.
    VertexId vertex_id(std::string_view label) const;

    /// All simplices, sorted by (dimension, handles).
    std::span<const Simplex> simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    bool contains(const Simplex& s) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    const Simplex& simplex(std::size_t index) const { return simplices_.at(index); }

    /// Highest simplex dimension, -1 for the empty complex.
    int dimension() const;
    /// Number of simplices of each dimension 0..dimension().
    std::vector<std::size_t> f_vector() const;
    /// Indices (into simplices()) of simplices that are not a facet of another.
    std::span<const std::size_t> maximal() const { return maximal_; }

    std::vector<Point> points_of(const Simplex& s) const;
    /// Vertex labels sorted lexicographically.
    std::vector<std::string> labels_of(const Simplex& s) const;
    /// "[A,B,C]" with labels sorted lexicographically; "A" for a vertex.
    std::string name_of(const Simplex& s) const;
    /// Simplex from labels (any order); throws StructuralError for unknown labels.
    Simplex simplex_from_labels(std::span<const std::string> labels) const;
    Simplex simplex_from_labels(std::initializer_list<std::string_view> labels) const;
    Point barycenter(const Simplex& s) const;

    /// Lazily-built grid over the maximal simplices, used for point location.
    const SpatialIndex& spatial_index() const;

private:
    friend class ComplexBuilder;

    std::size_t ambient_dim_ = 0;
    std::vector<Vertex> vertices_;
    std::unordered_map<std::string, VertexId> by_label_;
    std::vector<Simplex> simplices_;
    std::vector<std::size_t> maximal_;

    struct IndexCache;
    std::shared_ptr<IndexCache> index_cache_;
};

/// Mutable accumulator that produces a GeometricComplex.
class ComplexBuilder
{
public:
    explicit ComplexBuilder(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    /// Starts from an existing complex (same handles).
    explicit ComplexBuilder(const GeometricComplex& base);

    std::size_t ambient_dim() const { return ambient_dim_; }

    /// Adds a vertex, or returns the existing handle when the label is
    /// already present with the same point. A known label with a different
    /// point throws StructuralError.
    VertexId add_vertex(const std::string& label, const Point& point);
    std::optional<VertexId> find_vertex(std::string_view label) const;
    const Point& point(VertexId v) const { return vertices_.at(v).point; }
    const std::string& label(VertexId v) const { return vertices_.at(v).label; }
    std::size_t vertex_count() const { return vertices_.size(); }

    /// Adds one simplex, without its faces.
    void add_simplex(const Simplex& s);
    /// Adds a simplex together with every face.
    void add_closed(const Simplex& s);

    /// Sorts and deduplicates the simplex list.
    GeometricComplex build() &&;
    GeometricComplex build() const&;

private:
    std::size_t ambient_dim_;
    std::vector<Vertex> vertices_;
    std::unordered_map<std::string, VertexId> by_label_;
    std::vector<Simplex> simplices_;
};

struct BarycentricCoords
{
    std::vector<Rational> weights;

    bool in_closed_simplex() const;
    bool in_relative_interior() const;
};

/// Exact barycentric coordinates of x relative to the vertices of s, or
/// nullopt when x is outside the affine hull of s. Throws StructuralError on
/// an ambient-dimension mismatch.
std::optional<BarycentricCoords> barycentric_coordinates(const GeometricComplex& k, const Simplex& s, const Point& x);

/// True when x lies in the relative interior of the realization of s.
bool in_relative_interior(const GeometricComplex& k, const Simplex& s, const Point& x);
/// True when x lies in the closed realization of s.
bool in_closed_simplex(const GeometricComplex& k, const Simplex& s, const Point& x);

}  // namespace simplicia
