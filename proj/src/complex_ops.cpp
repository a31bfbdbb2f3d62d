#include "simplicia/complex_ops.hpp"

#include "simplicia/exact_linalg.hpp"
#include "simplicia/exact_lp.hpp"
#include "simplicia/spatial_index.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace simplicia {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::FaceClosure:
        return "face-closure";
    case ViolationKind::AffineDependence:
        return "affine-dependence";
    case ViolationKind::ImproperIntersection:
        return "improper-intersection";
    }
    return "unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::to_string() const
{
    if (violations.empty())
        return "valid\n";
    std::ostringstream out;
    for (const auto& v : violations) {
        out << simplicia::to_string(v.kind) << ":";
        for (const auto& s : v.simplices)
            out << ' ' << s;
        out << " (" << v.message << ")\n";
    }
    return out.str();
}

namespace {

// Feasibility region {lambda, mu >= 0, sum lambda = 1, sum mu = 1,
// sum lambda_i s_i = sum mu_j t_j}; the objective picks which weights to push.
lp::Problem intersection_program(const GeometricComplex& k, const Simplex& s, const Simplex& t)
{
    const std::size_t d = k.ambient_dim();
    const std::size_t n = s.size() + t.size();
    lp::Problem p{RationalMatrix(d + 2, n), std::vector<Rational>(d + 2, Rational(0)),
                  std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point& x = k.point(s[i]);
        for (std::size_t a = 0; a < d; ++a)
            p.equalities(a, i) = x[a];
        p.equalities(d, i) = 1;
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
        const Point& x = k.point(t[j]);
        for (std::size_t a = 0; a < d; ++a)
            p.equalities(a, s.size() + j) = -x[a];
        p.equalities(d + 1, s.size() + j) = 1;
    }
    p.rhs[d] = 1;
    p.rhs[d + 1] = 1;
    return p;
}

}  // namespace

namespace {

// Cheap certificate tried before the linear program. For a full-dimensional
// s, the barycentric weight of a vertex a not in t is >= 0 on |s| and 0 on
// the shared face; if it is negative at every vertex of t outside s, then
// |s| and |t| meet exactly in the shared face.
bool separated_by_facet(const GeometricComplex& k, const SpatialIndex& index, std::size_t position, const Simplex& s,
                        const Simplex& t)
{
    if (static_cast<std::size_t>(s.dim()) != k.ambient_dim())
        return false;
    std::vector<std::vector<Rational>> weights;
    for (VertexId u : t) {
        if (s.contains(u))
            continue;
        auto w = index.coordinates(position, k.point(u));
        if (!w)
            return false;
        weights.push_back(std::move(*w));
    }
    if (weights.empty())
        return false;
    for (std::size_t a = 0; a < s.size(); ++a) {
        if (t.contains(s[a]))
            continue;
        if (std::all_of(weights.begin(), weights.end(), [a](const std::vector<Rational>& w) { return sgn(w[a]) < 0; }))
            return true;
    }
    return false;
}

}  // namespace

bool intersects_properly(const GeometricComplex& k, const Simplex& s, const Simplex& t)
{
    lp::Problem p = intersection_program(k, s, t);
    bool any_private = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!t.contains(s[i])) {
            p.objective[i] = 1;
            any_private = true;
        }
    }
    if (!any_private)
        return true;  // s is a face of t
    auto solution = lp::maximize(p);
    if (solution.status == lp::Status::Infeasible)
        return true;
    return sgn(solution.value) == 0;
}

bool interiors_intersect(const GeometricComplex& k, const Simplex& s, const Simplex& t)
{
    // Maximize a common lower bound e on all weights: write each weight as
    // w' + e with w' >= 0 and e >= 0; interiors meet iff the optimum e > 0.
    const std::size_t d = k.ambient_dim();
    const std::size_t n = s.size() + t.size();
    lp::Problem base = intersection_program(k, s, t);
    lp::Problem p{RationalMatrix(d + 2, n + 1), base.rhs, std::vector<Rational>(n + 1, Rational(0))};
    for (std::size_t r = 0; r < d + 2; ++r) {
        Rational row_sum = 0;
        for (std::size_t c = 0; c < n; ++c) {
            p.equalities(r, c) = base.equalities(r, c);
            row_sum += base.equalities(r, c);
        }
        p.equalities(r, n) = row_sum;
    }
    p.objective[n] = 1;
    auto solution = lp::maximize(p);
    return solution.status == lp::Status::Optimal && sgn(solution.value) > 0;
}

ValidationReport validate_complex(const GeometricComplex& k)
{
    ValidationReport report;

    for (const auto& s : k.simplices()) {
        for (const auto& f : s.facets()) {
            if (!k.contains(f)) {
                report.violations.push_back(
                    {ViolationKind::FaceClosure, {k.name_of(s), k.name_of(f)}, "face " + k.name_of(f) + " missing"});
            }
        }
    }

    bool dependent = false;
    for (std::size_t index : k.maximal()) {
        const Simplex& s = k.simplex(index);
        auto pts = k.points_of(s);
        if (!affinely_independent(pts)) {
            dependent = true;
            report.violations.push_back(
                {ViolationKind::AffineDependence, {k.name_of(s)}, "vertices are affinely dependent"});
        }
    }
    if (dependent)
        return report;

    const SpatialIndex& index = k.spatial_index();
    const auto maximal = k.maximal();
    for (auto [i, j] : index.overlapping_pairs()) {
        const Simplex& s = k.simplex(maximal[i]);
        const Simplex& t = k.simplex(maximal[j]);
        if (separated_by_facet(k, index, i, s, t) || separated_by_facet(k, index, j, t, s))
            continue;
        if (!intersects_properly(k, s, t) || !intersects_properly(k, t, s)) {
            report.violations.push_back({ViolationKind::ImproperIntersection,
                                         {k.name_of(s), k.name_of(t)},
                                         "intersection is not a common face"});
        }
    }
    return report;
}

GeometricComplex subcomplex_where(const GeometricComplex& k, const std::function<bool(const Simplex&)>& keep)
{
    std::vector<const Simplex*> kept;
    std::vector<char> used(k.vertex_count(), 0);
    for (const auto& s : k.simplices()) {
        if (keep(s)) {
            kept.push_back(&s);
            for (VertexId v : s)
                used[v] = 1;
        }
    }
    ComplexBuilder b(k.ambient_dim());
    std::vector<VertexId> remap(k.vertex_count(), 0);
    for (VertexId v = 0; v < k.vertex_count(); ++v) {
        if (used[v])
            remap[v] = b.add_vertex(k.label(v), k.point(v));
    }
    for (const Simplex* s : kept) {
        Simplex::Storage ids;
        for (VertexId v : *s)
            ids.push_back(remap[v]);
        b.add_simplex(Simplex(std::move(ids)));
    }
    return std::move(b).build();
}

GeometricComplex skeleton(const GeometricComplex& k, int p)
{
    if (p < 0)
        throw std::invalid_argument("skeleton: negative dimension");
    return subcomplex_where(k, [p](const Simplex& s) { return s.dim() <= p; });
}

std::optional<Simplex> carrier(const GeometricComplex& k, const Point& x)
{
    if (x.dim() != k.ambient_dim()) {
        throw StructuralError("point has " + std::to_string(x.dim()) + " coordinates, ambient dimension is " +
                              std::to_string(k.ambient_dim()));
    }
    return k.spatial_index().locate(x);
}

GeometricComplex intersect_subcomplexes(const GeometricComplex& k, const std::vector<std::vector<Simplex>>& selections)
{
    if (selections.empty())
        return k;
    std::vector<std::set<Simplex>> sets;
    for (const auto& selection : selections) {
        std::set<Simplex> set(selection.begin(), selection.end());
        for (const auto& s : set) {
            if (!k.contains(s))
                throw StructuralError("selection contains a simplex outside the complex");
            for (const auto& f : s.facets()) {
                if (!set.count(f))
                    throw StructuralError("selection is not face-closed: " + k.name_of(s) + " lacks " + k.name_of(f));
            }
        }
        sets.push_back(std::move(set));
    }
    return subcomplex_where(k, [&](const Simplex& s) {
        return std::all_of(sets.begin(), sets.end(), [&](const std::set<Simplex>& set) { return set.count(s) > 0; });
    });
}

IncompatibleUnion::IncompatibleUnion(std::string first, std::string second)
    : std::runtime_error("incompatible union: " + first + " and " + second +
                         " do not meet in a common subcomplex"),
      first_(std::move(first)), second_(std::move(second))
{
}

namespace {

bool boxes_meet(const std::vector<Point>& a, const std::vector<Point>& b)
{
    const std::size_t d = a.front().dim();
    for (std::size_t axis = 0; axis < d; ++axis) {
        Rational alo = a.front()[axis], ahi = alo, blo = b.front()[axis], bhi = blo;
        for (const auto& p : a) {
            if (p[axis] < alo)
                alo = p[axis];
            if (p[axis] > ahi)
                ahi = p[axis];
        }
        for (const auto& p : b) {
            if (p[axis] < blo)
                blo = p[axis];
            if (p[axis] > bhi)
                bhi = p[axis];
        }
        if (ahi < blo || bhi < alo)
            return false;
    }
    return true;
}

}  // namespace

GeometricComplex union_complexes(const std::vector<GeometricComplex>& parts)
{
    if (parts.empty())
        return GeometricComplex();
    const std::size_t d = parts.front().ambient_dim();
    ComplexBuilder b(d);
    std::vector<std::vector<Simplex>> part_maximal(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& part = parts[p];
        if (part.ambient_dim() != d)
            throw StructuralError("union_complexes: ambient dimensions differ");
        std::vector<VertexId> remap(part.vertex_count());
        for (VertexId v = 0; v < part.vertex_count(); ++v)
            remap[v] = b.add_vertex(part.label(v), part.point(v));
        auto translate = [&](const Simplex& s) {
            Simplex::Storage ids;
            for (VertexId v : s)
                ids.push_back(remap[v]);
            return Simplex(std::move(ids));
        };
        for (const auto& s : part.simplices())
            b.add_simplex(translate(s));
        for (std::size_t index : part.maximal())
            part_maximal[p].push_back(translate(part.simplex(index)));
    }
    GeometricComplex result = std::move(b).build();

    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t q = p + 1; q < parts.size(); ++q) {
            for (const auto& s : part_maximal[p]) {
                auto sp = result.points_of(s);
                for (const auto& t : part_maximal[q]) {
                    if (s == t || !boxes_meet(sp, result.points_of(t)))
                        continue;
                    if (!intersects_properly(result, s, t) || !intersects_properly(result, t, s))
                        throw IncompatibleUnion(result.name_of(s), result.name_of(t));
                }
            }
        }
    }
    return result;
}

GeometricKey geometric_key(const GeometricComplex& k)
{
    GeometricKey key;
    for (const auto& s : k.simplices()) {
        auto pts = k.points_of(s);
        std::sort(pts.begin(), pts.end());
        key.insert(std::move(pts));
    }
    return key;
}

bool geometrically_equal(const GeometricComplex& a, const GeometricComplex& b)
{
    if (a.ambient_dim() != b.ambient_dim() || a.size() != b.size())
        return false;
    return geometric_key(a) == geometric_key(b);
}

std::set<std::vector<std::string>> label_key(const GeometricComplex& k)
{
    std::set<std::vector<std::string>> key;
    for (const auto& s : k.simplices())
        key.insert(k.labels_of(s));
    return key;
}

std::vector<Simplex> simplices_containing(const GeometricComplex& k, VertexId v)
{
    std::vector<Simplex> out;
    for (const auto& s : k.simplices()) {
        if (s.contains(v))
            out.push_back(s);
    }
    return out;
}

}  // namespace simplicia
