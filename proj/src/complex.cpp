#include "simplicia/complex.hpp"

#include "simplicia/exact_linalg.hpp"
#include "simplicia/spatial_index.hpp"

#include <algorithm>
#include <mutex>

namespace simplicia {

// ---------------------------------------------------------------- Simplex

namespace {

void normalize(Simplex::Storage& v)
{
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw StructuralError("simplex has a repeated vertex");
}

}  // namespace

Simplex::Simplex(std::initializer_list<VertexId> vertices) : vertices_(vertices.begin(), vertices.end())
{
    normalize(vertices_);
}

Simplex::Simplex(std::span<const VertexId> vertices) : vertices_(vertices.begin(), vertices.end())
{
    normalize(vertices_);
}

Simplex::Simplex(Storage vertices) : vertices_(std::move(vertices))
{
    normalize(vertices_);
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::vector<Simplex> Simplex::faces() const
{
    const std::size_t n = vertices_.size();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i))
                f.vertices_.push_back(vertices_[i]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> Simplex::facets() const
{
    std::vector<Simplex> out;
    if (vertices_.size() < 2)
        return out;
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
        Simplex f;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i != skip)
                f.vertices_.push_back(vertices_[i]);
        }
        out.push_back(std::move(f));
    }
    return out;
}

Simplex Simplex::with_vertex(VertexId v) const
{
    Storage s = vertices_;
    s.push_back(v);
    return Simplex(std::move(s));
}

Simplex Simplex::without_vertex(VertexId v) const
{
    Simplex out;
    for (VertexId u : vertices_) {
        if (u != v)
            out.vertices_.push_back(u);
    }
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                                  b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (VertexId v : s) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

// ------------------------------------------------------- GeometricComplex

struct GeometricComplex::IndexCache
{
    std::once_flag once;
    std::unique_ptr<SpatialIndex> index;
};

GeometricComplex::GeometricComplex() : index_cache_(std::make_shared<IndexCache>()) {}

std::optional<VertexId> GeometricComplex::find_vertex(std::string_view label) const
{
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

VertexId GeometricComplex::vertex_id(std::string_view label) const
{
    if (auto v = find_vertex(label))
        return *v;
    throw StructuralError("unknown vertex '" + std::string(label) + "'");
}

bool GeometricComplex::contains(const Simplex& s) const
{
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
}

std::optional<std::size_t> GeometricComplex::index_of(const Simplex& s) const
{
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it == simplices_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - simplices_.begin());
}

int GeometricComplex::dimension() const
{
    return simplices_.empty() ? -1 : simplices_.back().dim();
}

std::vector<std::size_t> GeometricComplex::f_vector() const
{
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& s : simplices_)
        ++f[static_cast<std::size_t>(s.dim())];
    return f;
}

std::vector<Point> GeometricComplex::points_of(const Simplex& s) const
{
    std::vector<Point> pts;
    pts.reserve(s.size());
    for (VertexId v : s)
        pts.push_back(point(v));
    return pts;
}

std::vector<std::string> GeometricComplex::labels_of(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s)
        out.push_back(label(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string GeometricComplex::name_of(const Simplex& s) const
{
    auto labels = labels_of(s);
    if (labels.size() == 1)
        return labels.front();
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i)
            out += ',';
        out += labels[i];
    }
    return out + "]";
}

Simplex GeometricComplex::simplex_from_labels(std::span<const std::string> labels) const
{
    Simplex::Storage ids;
    for (const auto& l : labels)
        ids.push_back(vertex_id(l));
    return Simplex(std::move(ids));
}

Simplex GeometricComplex::simplex_from_labels(std::initializer_list<std::string_view> labels) const
{
    Simplex::Storage ids;
    for (auto l : labels)
        ids.push_back(vertex_id(l));
    return Simplex(std::move(ids));
}

Point GeometricComplex::barycenter(const Simplex& s) const
{
    auto pts = points_of(s);
    return centroid(pts);
}

const SpatialIndex& GeometricComplex::spatial_index() const
{
    std::call_once(index_cache_->once, [this] { index_cache_->index = std::make_unique<SpatialIndex>(*this); });
    return *index_cache_->index;
}

// --------------------------------------------------------- ComplexBuilder

ComplexBuilder::ComplexBuilder(const GeometricComplex& base)
    : ambient_dim_(base.ambient_dim_), vertices_(base.vertices_), by_label_(base.by_label_),
      simplices_(base.simplices_)
{
}

VertexId ComplexBuilder::add_vertex(const std::string& label, const Point& point)
{
    if (point.dim() != ambient_dim_) {
        throw StructuralError("vertex '" + label + "' has " + std::to_string(point.dim()) +
                              " coordinates, ambient dimension is " + std::to_string(ambient_dim_));
    }
    if (auto it = by_label_.find(label); it != by_label_.end()) {
        if (vertices_[it->second].point != point)
            throw StructuralError("vertex label '" + label + "' reused for a different point");
        return it->second;
    }
    auto id = static_cast<VertexId>(vertices_.size());
    vertices_.push_back({label, point});
    by_label_.emplace(label, id);
    return id;
}

std::optional<VertexId> ComplexBuilder::find_vertex(std::string_view label) const
{
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

void ComplexBuilder::add_simplex(const Simplex& s)
{
    if (s.empty())
        throw StructuralError("empty simplex");
    for (VertexId v : s) {
        if (v >= vertices_.size())
            throw StructuralError("simplex refers to an unknown vertex handle " + std::to_string(v));
    }
    simplices_.push_back(s);
}

void ComplexBuilder::add_closed(const Simplex& s)
{
    for (auto& f : s.faces())
        add_simplex(f);
}

namespace {

std::vector<std::size_t> compute_maximal(const std::vector<Simplex>& simplices)
{
    std::vector<char> covered(simplices.size(), 0);
    for (const auto& s : simplices) {
        for (const auto& f : s.facets()) {
            auto it = std::lower_bound(simplices.begin(), simplices.end(), f);
            if (it != simplices.end() && *it == f)
                covered[static_cast<std::size_t>(it - simplices.begin())] = 1;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        if (!covered[i])
            out.push_back(i);
    }
    return out;
}

}  // namespace

GeometricComplex ComplexBuilder::build() &&
{
    GeometricComplex k;
    k.ambient_dim_ = ambient_dim_;
    k.vertices_ = std::move(vertices_);
    k.by_label_ = std::move(by_label_);
    k.simplices_ = std::move(simplices_);
    std::sort(k.simplices_.begin(), k.simplices_.end());
    k.simplices_.erase(std::unique(k.simplices_.begin(), k.simplices_.end()), k.simplices_.end());
    k.maximal_ = compute_maximal(k.simplices_);
    return k;
}

GeometricComplex ComplexBuilder::build() const&
{
    ComplexBuilder copy = *this;
    return std::move(copy).build();
}

// ------------------------------------------------- barycentric coordinates

bool BarycentricCoords::in_closed_simplex() const
{
    return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) >= 0; });
}

bool BarycentricCoords::in_relative_interior() const
{
    return std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) > 0; });
}

std::optional<BarycentricCoords> barycentric_coordinates(const GeometricComplex& k, const Simplex& s, const Point& x)
{
    if (x.dim() != k.ambient_dim()) {
        throw StructuralError("point has " + std::to_string(x.dim()) + " coordinates, ambient dimension is " +
                              std::to_string(k.ambient_dim()));
    }
    auto pts = k.points_of(s);
    if (!affinely_independent(pts))
        throw StructuralError("simplex " + k.name_of(s) + " is affinely dependent");
    auto w = affine_coordinates(pts, x);
    if (!w)
        return std::nullopt;
    return BarycentricCoords{std::move(*w)};
}

bool in_relative_interior(const GeometricComplex& k, const Simplex& s, const Point& x)
{
    auto c = barycentric_coordinates(k, s, x);
    return c && c->in_relative_interior();
}

bool in_closed_simplex(const GeometricComplex& k, const Simplex& s, const Point& x)
{
    auto c = barycentric_coordinates(k, s, x);
    return c && c->in_closed_simplex();
}

}  // namespace simplicia
