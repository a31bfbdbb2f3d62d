#include "simplicia/property_suite.hpp"

#include "simplicia/complex_json.hpp"
#include "simplicia/complex_ops.hpp"
#include "simplicia/metric.hpp"
#include "simplicia/stars.hpp"
#include "simplicia/subdivision.hpp"
#include "simplicia/verification.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace simplicia {

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return !e.passed; }));
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        out.push_back({{"fixture", e.fixture},
                       {"property", e.property},
                       {"status", e.passed ? "pass" : "fail"},
                       {"counterexample", e.counterexample ? complex_to_json(*e.counterexample) : nlohmann::json()}});
    }
    return out;
}

std::string SuiteReport::to_text() const
{
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.passed ? "pass " : "FAIL ") << e.fixture << " / " << e.property;
        if (!e.passed && !e.detail.empty())
            out << ": " << e.detail;
        out << '\n';
    }
    out << entries.size() - failures() << " passed, " << failures() << " failed\n";
    return out.str();
}

const std::vector<std::string>& suite_properties()
{
    static const std::vector<std::string> names{
        "face closure",         "affine independence", "proper intersection",  "carrier uniqueness",
        "barycentric round trip", "skeleton composition", "constructions valid", "oracle equivalence",
        "realization preserved", "transitivity",        "witness coherence",    "volume self-test",
        "simplex counts",       "star membership",     "star inclusion",       "mesh contraction",
        "iterated contraction", "mesh monotone",       "diameter invariance",  "claimed subdivision",
        "claimed realization",  "deterministic verdicts"};
    return names;
}

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;
    std::optional<GeometricComplex> counterexample;
};

Outcome fail(std::string detail, std::optional<GeometricComplex> counterexample)
{
    return {false, std::move(detail), std::move(counterexample)};
}

Outcome from_verdict(const Verdict& v, const GeometricComplex& counterexample)
{
    if (v.passed())
        return {};
    std::string detail = v.failures.front();
    if (v.failures.size() > 1)
        detail += " (+" + std::to_string(v.failures.size() - 1) + " more)";
    return fail(std::move(detail), counterexample);
}

long factorial(int n)
{
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::size_t count_dim(const GeometricComplex& k, int d)
{
    return static_cast<std::size_t>(
        std::count_if(k.simplices().begin(), k.simplices().end(), [&](const Simplex& s) { return s.dim() == d; }));
}

/// Vertices relabelled in reverse order and translated by a fixed vector.
GeometricComplex moved_copy(const GeometricComplex& k)
{
    Point shift = Point::zero(k.ambient_dim());
    for (std::size_t a = 0; a < shift.dim(); ++a)
        shift[a] = Rational(static_cast<long>(2 * a + 1)) / static_cast<long>(3 + a) * (a % 2 ? -1 : 1);
    ComplexBuilder b(k.ambient_dim());
    std::vector<VertexId> handle(k.vertex_count());
    for (VertexId v = k.vertex_count(); v-- > 0;)
        handle[v] = b.add_vertex("r" + std::to_string(k.vertex_count() - v) + "_" + k.label(v), k.point(v) + shift);
    for (const auto& s : k.simplices()) {
        Simplex::Storage ids;
        for (VertexId v : s)
            ids.push_back(handle[v]);
        b.add_simplex(Simplex(std::move(ids)));
    }
    return std::move(b).build();
}

std::multiset<Rational> maximal_diameters(const GeometricComplex& k, MetricKind kind)
{
    std::multiset<Rational> out;
    for (std::size_t i : k.maximal())
        out.insert(diameter(k, k.simplex(i), kind).measure);
    return out;
}

class FixtureRun
{
public:
    FixtureRun(const Fixture& f, const SuiteOptions& options, SuiteReport& report)
        : f_(f), k_(f.complex), options_(options), report_(report)
    {
    }

    void run()
    {
        ValidationReport validity;
        try {
            validity = validate_complex(k_);
        } catch (const std::exception& e) {
            add("face closure", fail(e.what(), k_));
            return;
        }
        auto structural = [&](const std::string& name, ViolationKind kind) {
            for (const auto& v : validity.violations)
                if (v.kind == kind)
                    return add(name, fail(v.message, k_));
            add(name, {});
        };
        structural("face closure", ViolationKind::FaceClosure);
        structural("affine independence", ViolationKind::AffineDependence);
        structural("proper intersection", ViolationKind::ImproperIntersection);
        if (!validity.valid())
            return;

        check("carrier uniqueness", [&] { return carrier_uniqueness(); });
        check("barycentric round trip", [&] { return round_trip(); });
        check("skeleton composition", [&] { return skeleton_composition(); });
        check("constructions valid", [&] { return constructions_valid(); });
        check("oracle equivalence", [&] { return oracle_equivalence(); });
        check("realization preserved", [&] { return realization_preserved(); });
        check("transitivity", [&] { return from_verdict(check_transitivity(k_, 2), k_); });
        check("witness coherence", [&] { return witness_coherence(); });
        check("volume self-test", [&] { return volume_selftest(); });
        if (k_.maximal().size() == 1)
            check("simplex counts", [&] { return simplex_counts(); });
        check("star membership", [&] { return star_membership(); });
        check("star inclusion", [&] { return from_verdict(check_star_lemma(k_), bsd()); });
        check("mesh contraction", [&] { return mesh_contraction(); });
        check("iterated contraction", [&] { return iterated_contraction(); });
        check("mesh monotone", [&] { return mesh_monotone(); });
        check("diameter invariance", [&] { return diameter_invariance(); });
        if (f_.claimed_subdivision) {
            check("claimed subdivision", [&] { return claimed_subdivision(); });
            check("claimed realization", [&] {
                return from_verdict(realization_equal(*f_.claimed_subdivision, k_, options_.samples),
                                    *f_.claimed_subdivision);
            });
        }
        check("deterministic verdicts", [&] { return deterministic(); });
    }

private:
    void add(const std::string& property, Outcome o)
    {
        report_.entries.push_back({f_.name, property, o.ok, o.ok ? std::nullopt : std::move(o.counterexample),
                                   std::move(o.detail)});
    }

    void check(const std::string& property, const std::function<Outcome()>& body)
    {
        try {
            add(property, body());
        } catch (const std::exception& e) {
            add(property, fail(std::string("exception: ") + e.what(), k_));
        }
    }

    const Subdivision& bsd_witnessed()
    {
        if (!bsd_)
            bsd_ = barycentric_subdivide(k_);
        return *bsd_;
    }
    const GeometricComplex& bsd() { return bsd_witnessed().complex; }
    const Subdivision& bsd2_witnessed()
    {
        if (!bsd2_)
            bsd2_ = barycentric_subdivide_n_witnessed(k_, 2);
        return *bsd2_;
    }

    Outcome carrier_uniqueness()
    {
        for (const auto& x : oracle::probe_points(k_, k_, options_.samples)) {
            const std::size_t n = oracle::interior_count(k_, x);
            const auto c = carrier(k_, x);
            if (n > 1)
                return fail(std::to_string(n) + " simplices contain " + to_string(x) + " in their interiors", k_);
            if ((n == 1) != c.has_value())
                return fail("indexed and exhaustive lookups disagree at " + to_string(x), k_);
            if (c && !in_relative_interior(k_, *c, x))
                return fail("carrier of " + to_string(x) + " does not hold it in its interior", k_);
        }
        return {};
    }

    Outcome round_trip()
    {
        std::mt19937 gen(20240521u);
        for (std::size_t index : k_.maximal()) {
            const Simplex& s = k_.simplex(index);
            const auto pts = k_.points_of(s);
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Rational> lambda(s.size());
                Rational total = 0;
                for (auto& l : lambda) {
                    l = static_cast<long>(gen() % 9u) + 1;
                    total += l;
                }
                for (auto& l : lambda)
                    l /= total;
                const Point x = affine_combination(pts, lambda);
                auto coords = barycentric_coordinates(k_, s, x);
                if (!coords || coords->weights != lambda)
                    return fail("coordinates of " + to_string(x) + " in " + k_.name_of(s) + " do not round-trip", k_);
            }
        }
        return {};
    }

    Outcome skeleton_composition()
    {
        const int top = k_.dimension() + 1;
        for (int p = 0; p <= top; ++p)
            for (int q = 0; q <= top; ++q)
                if (label_key(skeleton(skeleton(k_, p), q)) != label_key(skeleton(k_, std::min(p, q))))
                    return fail("skeleton(skeleton(K," + std::to_string(p) + ")," + std::to_string(q) + ") differs", k_);
        return {};
    }

    Outcome constructions_valid()
    {
        auto valid = [](const GeometricComplex& c) { return validate_complex(c).valid(); };
        if (!valid(bsd()))
            return fail("barycentric subdivision is not a valid complex", bsd());
        // A construction realizing the same simplices as Bsd(K) shares its validity.
        const auto key = geometric_key(bsd());
        const auto flags = barycentric_flags(k_);
        if (geometric_key(flags) != key && !valid(flags))
            return fail("flag complex is not a valid complex", flags);
        const auto skel = subdivide_skeletonwise(k_, ApexChooser::barycenter());
        if (geometric_key(skel.complex) != key && !valid(skel.complex))
            return fail("skeletonwise subdivision is not a valid complex", skel.complex);
        if (k_.dimension() <= 2 && !valid(bsd2_witnessed().complex))
            return fail("second barycentric subdivision is not a valid complex", bsd2_witnessed().complex);
        return {};
    }

    Outcome oracle_equivalence()
    {
        const auto key = geometric_key(bsd());
        const auto flags = barycentric_flags(k_);
        if (geometric_key(flags) != key)
            return fail("flag construction differs from the barycentric subdivision", flags);
        const auto skel = subdivide_skeletonwise(k_, ApexChooser::barycenter());
        if (geometric_key(skel.complex) != key)
            return fail("skeletonwise construction differs from the barycentric subdivision", skel.complex);
        return {};
    }

    Outcome realization_preserved()
    {
        auto first = realization_equal(bsd(), k_, options_.samples);
        if (!first.passed())
            return from_verdict(first, bsd());
        return from_verdict(realization_equal(bsd2_witnessed().complex, k_, options_.samples), bsd2_witnessed().complex);
    }

    Outcome witness_coherence()
    {
        if (k_.dimension() > 3)
            return {};
        const auto& sub = bsd_witnessed();
        for (std::size_t j = 0; j < k_.size(); ++j) {
            const auto& cover = sub.witness.covering[j];
            for (std::size_t a = 0; a < cover.size(); ++a)
                for (std::size_t b = a + 1; b < cover.size(); ++b)
                    if (interiors_intersect(sub.complex, sub.complex.simplex(cover[a]), sub.complex.simplex(cover[b])))
                        return fail("covering of " + k_.name_of(k_.simplex(j)) + " has overlapping interiors",
                                    sub.complex);
        }
        return {};
    }

    Outcome volume_selftest()
    {
        const auto& sub = bsd_witnessed();
        if (auto v = witness_volume_selftest(sub.complex, k_, sub.witness); !v.passed())
            return from_verdict(v, sub.complex);
        auto checked = is_subdivision(sub.complex, k_);
        if (auto* w = std::get_if<SubdivisionWitness>(&checked)) {
            if (auto v = witness_volume_selftest(sub.complex, k_, *w); !v.passed())
                return from_verdict(v, sub.complex);
        } else {
            return fail("barycentric subdivision refuted: " + std::get<Refutation>(checked).detail, sub.complex);
        }
        const auto& sub2 = bsd2_witnessed();
        return from_verdict(witness_volume_selftest(sub2.complex, k_, sub2.witness), sub2.complex);
    }

    Outcome simplex_counts()
    {
        const int n = k_.dimension();
        const auto expected = static_cast<std::size_t>(factorial(n + 1));
        if (count_dim(bsd(), n) != expected)
            return fail("Bsd has " + std::to_string(count_dim(bsd(), n)) + " top simplices", bsd());
        if (count_dim(bsd2_witnessed().complex, n) != expected * expected)
            return fail("Bsd^2 has " + std::to_string(count_dim(bsd2_witnessed().complex, n)) + " top simplices",
                        bsd2_witnessed().complex);
        return {};
    }

    Outcome star_membership()
    {
        const auto probes = oracle::probe_points(k_, k_, options_.samples);
        for (VertexId v = 0; v < k_.vertex_count(); ++v) {
            if (!k_.contains(Simplex{v}))
                continue;
            const OpenStar star = open_star(k_, v);
            std::vector<Simplex> expected;
            for (const auto& s : k_.simplices())
                if (s.contains(v))
                    expected.push_back(s);
            auto pieces = star.pieces;
            std::sort(pieces.begin(), pieces.end());
            if (pieces != expected)
                return fail("pieces of St(" + k_.label(v) + ") are not the simplices containing it", k_);
            for (const auto& x : probes)
                if (star_contains(k_, star, x) != star_contains_by_definition(k_, star, x))
                    return fail("carrier test and definition disagree on St(" + k_.label(v) + ") at " + to_string(x),
                                k_);
        }
        return {};
    }

    Outcome mesh_contraction()
    {
        const Rational c = contraction_factor(k_.dimension());
        for (auto kind : {MetricKind::LInf, MetricKind::L2}) {
            const Length before = mesh_value(k_, kind);
            const Length after = mesh_value(bsd(), kind);
            if (!(after <= before.scaled(c)))
                return fail(to_string(kind) + " mesh " + after.render(true) + " exceeds " +
                                before.scaled(c).render(true),
                            bsd());
        }
        return {};
    }

    Outcome iterated_contraction()
    {
        const int n = k_.dimension();
        if (n < 1)
            return {};
        const int depth = std::min(options_.contraction_depth, n <= 2 ? 4 : (n == 3 ? 3 : 2));
        const Rational c = contraction_factor(n);
        const Length linf0 = mesh_value(k_, MetricKind::LInf);
        const Length l20 = mesh_value(k_, MetricKind::L2);
        GeometricComplex current = k_;
        Rational factor = 1;
        for (int m = 1; m <= depth; ++m) {
            current = m <= 2 ? (m == 1 ? bsd() : bsd2_witnessed().complex) : barycentric_subdivide(current).complex;
            factor *= c;
            if (!(mesh_value(current, MetricKind::LInf) <= linf0.scaled(factor)) ||
                !(mesh_value(current, MetricKind::L2) <= l20.scaled(factor)))
                return fail("mesh of Bsd^" + std::to_string(m) + " exceeds the contraction bound", current);
        }
        return {};
    }

    Outcome mesh_monotone()
    {
        for (auto kind : {MetricKind::LInf, MetricKind::L2}) {
            const Length before = mesh_value(k_, kind);
            const Length after = mesh_value(bsd(), kind);
            const bool expected_equal = k_.dimension() <= 0;
            if (expected_equal ? !(after == before) : !(after < before))
                return fail(to_string(kind) + " mesh did not shrink", bsd());
        }
        return {};
    }

    Outcome diameter_invariance()
    {
        const GeometricComplex moved = moved_copy(k_);
        for (auto kind : {MetricKind::LInf, MetricKind::L2})
            if (maximal_diameters(moved, kind) != maximal_diameters(k_, kind))
                return fail(to_string(kind) + " diameters change under relabelling and translation", moved);
        return {};
    }

    Outcome claimed_subdivision()
    {
        const GeometricComplex& l = *f_.claimed_subdivision;
        if (auto v = validate_complex(l); !v.valid())
            return fail("claimed subdivision is not a valid complex: " + v.violations.front().message, l);
        auto r = is_subdivision(l, k_);
        if (auto* refutation = std::get_if<Refutation>(&r))
            return fail("condition " + std::to_string(refutation->condition) + " fails on " + refutation->simplex +
                            ": " + refutation->detail,
                        l);
        return from_verdict(witness_volume_selftest(l, k_, std::get<SubdivisionWitness>(r)), l);
    }

    Outcome deterministic()
    {
        const auto a = realization_equal(bsd(), k_, options_.samples).to_string();
        const auto b = realization_equal(barycentric_subdivide(k_).complex, k_, options_.samples).to_string();
        if (a != b)
            return fail("repeated realization checks differ", k_);
        if (serialize_complex(bsd()) != serialize_complex(barycentric_subdivide(k_).complex))
            return fail("repeated subdivisions serialize differently", k_);
        return {};
    }

    const Fixture& f_;
    const GeometricComplex& k_;
    const SuiteOptions& options_;
    SuiteReport& report_;
    std::optional<Subdivision> bsd_;
    std::optional<Subdivision> bsd2_;
};

}  // namespace

SuiteReport run_property_suite(const std::vector<Fixture>& corpus, const SuiteOptions& options)
{
    std::vector<const Fixture*> ordered;
    for (const auto& f : corpus)
        ordered.push_back(&f);
    std::stable_sort(ordered.begin(), ordered.end(), [](const Fixture* a, const Fixture* b) { return a->name < b->name; });
    SuiteReport report;
    for (const Fixture* f : ordered)
        FixtureRun(*f, options, report).run();
    return report;
}

}  // namespace simplicia
