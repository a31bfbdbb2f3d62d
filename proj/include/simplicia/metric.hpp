#pragma once

#include "simplicia/complex.hpp"

#include <map>
#include <string>

namespace simplicia {

/// LInf is max |x_a - y_a|, the default ambient metric; L2 is Euclidean.
enum class MetricKind { LInf, L2 };

std::string to_string(MetricKind kind);
/// "linf" or "l2"; throws std::invalid_argument otherwise.
MetricKind parse_metric(std::string_view text);

/// An exact length. Under L2 only the square is rational, so `measure`
/// holds the squared length; comparisons and scaling account for that.
struct Length
{
    Rational measure;
    MetricKind kind = MetricKind::LInf;

    /// Length as a double (square root taken for L2), for reports.
    double approx() const;
    /// Decimal with 6 significant digits, or the exact rational ("sqrt(q)" for L2).
    std::string render(bool exact) const;

    /// c * length.
    Length scaled(const Rational& c) const;
    /// length < value.
    bool less_than(const Rational& value) const;

    friend bool operator==(const Length& a, const Length& b);
    friend bool operator<(const Length& a, const Length& b);
    friend bool operator<=(const Length& a, const Length& b) { return !(b < a); }
};

Length distance(const Point& a, const Point& b, MetricKind kind);

/// Maximum pairwise vertex distance. This is the diameter of the convex
/// realization for any norm, since a convex function on a polytope peaks at
/// a vertex.
Length diameter(const GeometricComplex& k, const Simplex& s, MetricKind kind = MetricKind::LInf);

struct MeshReport
{
    Length mesh;
    std::map<Simplex, Length> per_simplex;
    /// n / (n + 1) with n = dim K (0 for an empty or 0-dimensional complex).
    Rational contraction_bound;
};

MeshReport mesh(const GeometricComplex& k, MetricKind kind = MetricKind::LInf);

/// mesh(k) alone, computed over maximal simplices only.
Length mesh_value(const GeometricComplex& k, MetricKind kind = MetricKind::LInf);

/// n / (n + 1).
Rational contraction_factor(int n);

struct IterationCount
{
    /// Least N with (n/(n+1))^N * mesh(K) < eps.
    int bound = 0;
    /// Least N with mesh(Bsd^N(K)) < eps, found by iterating.
    int actual = 0;
    /// mesh(Bsd^actual(K)), which is < eps.
    Length final_mesh;
};

/// Throws std::invalid_argument when eps <= 0.
IterationCount subdivisions_needed(const GeometricComplex& k, const Rational& eps, MetricKind kind = MetricKind::LInf);

}  // namespace simplicia
