#include "simplicia/metric.hpp"

#include "simplicia/subdivision.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace simplicia {

std::string to_string(MetricKind kind)
{
    return kind == MetricKind::LInf ? "linf" : "l2";
}

MetricKind parse_metric(std::string_view text)
{
    if (text == "linf")
        return MetricKind::LInf;
    if (text == "l2")
        return MetricKind::L2;
    throw std::invalid_argument("unknown metric '" + std::string(text) + "' (expected linf or l2)");
}

double Length::approx() const
{
    const double v = measure.get_d();
    return kind == MetricKind::L2 ? std::sqrt(v) : v;
}

std::string Length::render(bool exact) const
{
    if (exact)
        return kind == MetricKind::L2 ? "sqrt(" + to_string(measure) + ")" : to_string(measure);
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", approx());
    return buffer;
}

Length Length::scaled(const Rational& c) const
{
    if (sgn(c) < 0)
        throw std::invalid_argument("Length::scaled: negative factor");
    return {kind == MetricKind::L2 ? Rational(measure * c * c) : Rational(measure * c), kind};
}

bool Length::less_than(const Rational& value) const
{
    if (sgn(value) <= 0)
        return false;
    return kind == MetricKind::L2 ? measure < value * value : measure < value;
}

bool operator==(const Length& a, const Length& b)
{
    if (a.kind != b.kind)
        throw std::invalid_argument("comparing lengths under different metrics");
    return a.measure == b.measure;
}

bool operator<(const Length& a, const Length& b)
{
    if (a.kind != b.kind)
        throw std::invalid_argument("comparing lengths under different metrics");
    return a.measure < b.measure;
}

Length distance(const Point& a, const Point& b, MetricKind kind)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("distance: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Rational diff = a[i] - b[i];
        if (kind == MetricKind::L2) {
            acc += diff * diff;
        } else {
            diff = abs(diff);
            if (diff > acc)
                acc = diff;
        }
    }
    return {acc, kind};
}

namespace {

// Scratch values reused across the pairs of one simplex.
struct DiameterScratch
{
    Rational diff;
    Rational square;
    Rational acc;
};

void measure_into(const GeometricComplex& k, const Simplex& s, MetricKind kind, DiameterScratch& scratch, Rational& best)
{
    best = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point& p = k.point(s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const Point& q = k.point(s[j]);
            scratch.acc = 0;
            for (std::size_t a = 0; a < p.dim(); ++a) {
                mpq_sub(scratch.diff.get_mpq_t(), p[a].get_mpq_t(), q[a].get_mpq_t());
                if (kind == MetricKind::L2) {
                    mpq_mul(scratch.square.get_mpq_t(), scratch.diff.get_mpq_t(), scratch.diff.get_mpq_t());
                    mpq_add(scratch.acc.get_mpq_t(), scratch.acc.get_mpq_t(), scratch.square.get_mpq_t());
                } else {
                    mpq_abs(scratch.diff.get_mpq_t(), scratch.diff.get_mpq_t());
                    if (scratch.acc < scratch.diff)
                        mpq_swap(scratch.acc.get_mpq_t(), scratch.diff.get_mpq_t());
                }
            }
            if (best < scratch.acc)
                best = scratch.acc;
        }
    }
}

}  // namespace

Length diameter(const GeometricComplex& k, const Simplex& s, MetricKind kind)
{
    DiameterScratch scratch;
    Length out{0, kind};
    measure_into(k, s, kind, scratch, out.measure);
    return out;
}

Rational contraction_factor(int n)
{
    if (n <= 0)
        return 0;
    return Rational(n, n + 1);
}

MeshReport mesh(const GeometricComplex& k, MetricKind kind)
{
    MeshReport report{{0, kind}, {}, contraction_factor(k.dimension())};
    for (const auto& s : k.simplices()) {
        Length d = diameter(k, s, kind);
        if (report.mesh < d)
            report.mesh = d;
        report.per_simplex.emplace(s, std::move(d));
    }
    return report;
}

Length mesh_value(const GeometricComplex& k, MetricKind kind)
{
    DiameterScratch scratch;
    Rational current;
    Length best{0, kind};
    for (std::size_t index : k.maximal()) {
        measure_into(k, k.simplex(index), kind, scratch, current);
        if (best.measure < current)
            mpq_swap(best.measure.get_mpq_t(), current.get_mpq_t());
    }
    return best;
}

IterationCount subdivisions_needed(const GeometricComplex& k, const Rational& eps, MetricKind kind)
{
    if (sgn(eps) <= 0)
        throw std::invalid_argument("subdivisions_needed: eps must be positive");
    const Length initial = mesh_value(k, kind);
    const Rational c = contraction_factor(k.dimension());

    IterationCount result;
    Rational factor = 1;
    while (!initial.scaled(factor).less_than(eps)) {
        factor *= c;
        ++result.bound;
    }

    GeometricComplex current = k;
    Length current_mesh = initial;
    while (!current_mesh.less_than(eps)) {
        if (result.actual >= result.bound)
            throw std::logic_error("subdivisions_needed: measured mesh exceeds the contraction bound");
        current = barycentric_subdivide_n(current, 1);
        current_mesh = mesh_value(current, kind);
        ++result.actual;
    }
    result.final_mesh = current_mesh;
    return result;
}

}  // namespace simplicia
