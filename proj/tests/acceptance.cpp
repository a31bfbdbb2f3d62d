// One line per acceptance criterion: PASS/FAIL, elapsed time, limit, detail.
// Exit status is nonzero when any criterion fails or overruns its limit.
#include "simplicia/cli.hpp"
#include "simplicia/complex_json.hpp"
#include "simplicia/complex_ops.hpp"
#include "simplicia/corpus.hpp"
#include "simplicia/metric.hpp"
#include "simplicia/property_suite.hpp"
#include "simplicia/stars.hpp"
#include "simplicia/subdivision.hpp"
#include "simplicia/verification.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

using namespace simplicia;

namespace {

// Time limits in seconds and the probe budget per realization check.
constexpr double kLimitCounts = 1;
constexpr double kLimitOracle = 10;
constexpr double kLimitRealization = 30;
constexpr double kLimitTransitivity = 30;
constexpr double kLimitStar = 10;
constexpr double kLimitMesh = 60;
constexpr double kLimitInduced = 1;
constexpr double kLimitSuite = 120;
constexpr double kLimitCli = 5;
constexpr long kProbeSamples = 600;
constexpr int kContractionDepth = 4;

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::size_t top_count(const GeometricComplex& k, int d)
{
    const auto f = k.f_vector();
    return d < static_cast<int>(f.size()) ? f[d] : 0;
}

Outcome paper_counts()
{
    Outcome o;
    const auto tri = fixtures::triangle();
    const auto one = top_count(barycentric_subdivide_n(tri, 1), 2);
    const auto two = top_count(barycentric_subdivide_n(tri, 2), 2);
    o.require(one == 6, "Bsd(triangle) has " + std::to_string(one) + " triangles");
    o.require(two == 36, "Bsd^2(triangle) has " + std::to_string(two) + " triangles");

    const auto tail = fixtures::triangle_with_tail();
    const auto edge = *tail.index_of(tail.simplex_from_labels({"v0", "w"}));
    std::size_t tail_edges[3] = {};
    for (int m = 1; m <= 2; ++m) {
        const auto s = barycentric_subdivide_n_witnessed(tail, m);
        for (auto i : s.witness.covering[edge])
            tail_edges[m] += s.complex.simplex(i).dim() == 1;
    }
    o.require(tail_edges[1] == 2, "tail has " + std::to_string(tail_edges[1]) + " edges after one subdivision");
    o.require(tail_edges[2] == 4, "tail has " + std::to_string(tail_edges[2]) + " edges after two subdivisions");
    if (o.ok)
        o.detail = "6 and 36 triangles, tail edges 2 and 4";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    int checked = 0;
    for (const auto& f : shipped_corpus()) {
        if (f.complex.dimension() > 3)
            continue;
        const auto key = geometric_key(barycentric_subdivide(f.complex).complex);
        o.require(key == geometric_key(barycentric_flags(f.complex)), f.name + ": flag construction differs");
        o.require(key == geometric_key(subdivide_skeletonwise(f.complex, ApexChooser::barycenter()).complex),
                  f.name + ": skeletonwise construction differs");
        ++checked;
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " fixtures, three constructions equal";
    return o;
}

Outcome realization()
{
    Outcome o;
    int pairs = 0;
    auto check = [&](const std::string& what, const GeometricComplex& l, const GeometricComplex& k) {
        const auto v = realization_equal(l, k, kProbeSamples);
        o.require(v.passed(), what + ": " + (v.failures.empty() ? std::string() : v.failures.front()));
        ++pairs;
    };
    for (const auto& f : shipped_corpus()) {
        const auto one = barycentric_subdivide(f.complex).complex;
        check(f.name + " Bsd", one, f.complex);
        check(f.name + " Bsd^2", barycentric_subdivide(one).complex, f.complex);
        if (f.claimed_subdivision)
            check(f.name + " claimed", *f.claimed_subdivision, f.complex);
    }
    check("edge split", fixtures::edge_ab_split(), fixtures::edge_ab());
    check("triangle split", fixtures::triangle_split(), fixtures::triangle());
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs, volumes and probes agree";
    return o;
}

Outcome transitivity()
{
    Outcome o;
    int pairs = 0;
    for (const auto& f : shipped_corpus()) {
        std::vector<Subdivision> level{{f.complex, SubdivisionWitness::identity(f.complex)}};
        for (int j = 1; j <= 2; ++j)
            level.push_back(barycentric_subdivide(level.back().complex));
        std::vector<std::vector<std::optional<SubdivisionWitness>>> w(3, std::vector<std::optional<SubdivisionWitness>>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto r = is_subdivision(level[j].complex, level[i].complex);
                ++pairs;
                if (auto* why = std::get_if<Refutation>(&r)) {
                    o.require(false, f.name + ": Bsd^" + std::to_string(j) + " vs Bsd^" + std::to_string(i) + ": " +
                                         why->detail);
                    continue;
                }
                w[i][j] = std::get<SubdivisionWitness>(std::move(r));
            }
        if (w[0][1] && w[1][2] && w[0][2]) {
            const auto composed = compose(level[2].complex, f.complex, *w[1][2], *w[0][1]);
            o.require(composed.refinement == w[0][2]->refinement, f.name + ": composed witness differs from direct");
        }
    }
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs with witnesses, composition matches";
    return o;
}

Outcome star_lemma()
{
    Outcome o;
    std::size_t vertices = 0, converse = 0;
    for (const auto& f : shipped_corpus()) {
        const auto& k = f.complex;
        if (k.dimension() > 2)
            continue;
        const auto bsd = barycentric_subdivide(k);
        for (VertexId w = 0; w < bsd.complex.vertex_count(); ++w) {
            const auto host = oracle::scan_carrier(k, bsd.complex.point(w));
            if (!host) {
                o.require(false, f.name + ": no carrier for " + bsd.complex.label(w));
                continue;
            }
            const std::set<VertexId> expected(host->begin(), host->end());
            o.require(star_inclusion_vertices(w, bsd.complex, k, bsd.witness) == expected,
                      f.name + ": wrong star inclusion for " + bsd.complex.label(w));
            ++vertices;
            const auto fine_star = open_star(bsd.complex, w);
            const auto probes = star_probe_points(bsd.complex, w);
            for (VertexId v = 0; v < k.vertex_count(); ++v) {
                if (expected.count(v))
                    continue;
                const auto coarse_star = open_star(k, v);
                bool escapes = false;
                for (const auto& x : probes)
                    escapes = escapes || (star_contains(bsd.complex, fine_star, x) && !star_contains(k, coarse_star, x));
                o.require(escapes, f.name + ": St(" + bsd.complex.label(w) + ") looks contained in St(" + k.label(v) + ")");
                ++converse;
            }
        }
    }

    const auto coarse = fixtures::star_triangle();
    const auto fine = fixtures::coned_triangle();
    auto r = is_subdivision(fine, coarse);
    if (auto* w = std::get_if<SubdivisionWitness>(&r)) {
        std::set<std::string> got;
        for (auto v : star_inclusion_vertices(fine.vertex_id("D"), fine, coarse, *w))
            got.insert(coarse.label(v));
        o.require(got == std::set<std::string>{"A", "B", "C"}, "coned apex does not give {A,B,C}");
    } else {
        o.require(false, "coned triangle is not a subdivision");
    }
    if (o.ok)
        o.detail = std::to_string(vertices) + " vertices, " + std::to_string(converse) +
                   " non-carrier vertices refuted, apex D -> {A,B,C}";
    return o;
}

Outcome mesh_contraction()
{
    Outcome o;
    int checks = 0;
    for (const auto& f : shipped_corpus()) {
        const int n = f.complex.dimension();
        if (n < 1 || n > 3)
            continue;
        const Rational c = contraction_factor(n);
        const Length linf = mesh_value(f.complex, MetricKind::LInf);
        const Length l2 = mesh_value(f.complex, MetricKind::L2);
        GeometricComplex k = f.complex;
        Rational factor = 1;
        for (int m = 1; m <= kContractionDepth; ++m) {
            k = barycentric_subdivide_n(k, 1);
            factor *= c;
            for (const auto& [initial, kind] : {std::pair{linf, MetricKind::LInf}, std::pair{l2, MetricKind::L2}}) {
                o.require(mesh_value(k, kind) <= initial.scaled(factor),
                          f.name + ": mesh bound fails at m=" + std::to_string(m) + " under " + to_string(kind));
                ++checks;
            }
        }
    }

    const auto simplex = fixtures::standard_simplex(2);
    const Rational eps(1, 10);
    o.require(mesh_value(simplex).measure == 1, "standard 2-simplex does not have mesh 1");
    const auto count = subdivisions_needed(simplex, eps);
    o.require(count.bound == 6, "N_bound = " + std::to_string(count.bound));
    const Length measured = mesh_value(barycentric_subdivide_n(simplex, count.actual));
    o.require(measured.less_than(eps), "mesh after N_actual subdivisions is not below 1/10");
    o.require(count.actual <= count.bound, "N_actual exceeds N_bound");
    if (o.ok)
        o.detail = std::to_string(checks) + " exact bounds; N_bound 6, N_actual " + std::to_string(count.actual) +
                   " with mesh " + measured.render(true);
    return o;
}

Outcome induced()
{
    Outcome o;
    const auto k = fixtures::triangle();
    const auto sub = induced_subdivision(fixtures::triangle_split(), fixtures::edge_ab(), k);
    std::set<std::string> got;
    for (const auto& s : sub.simplices())
        got.insert(sub.name_of(s));
    o.require(got == std::set<std::string>{"A", "B", "D", "[A,D]", "[B,D]"}, "unexpected induced subdivision");
    o.require(sub.point(sub.vertex_id("D")) == Point{Rational(1, 2), 0}, "D is not the midpoint of [A,B]");
    if (o.ok)
        o.detail = "{A, B, D, [A,D], [B,D]}";
    return o;
}

Outcome suite()
{
    Outcome o;
    const auto report = run_property_suite(shipped_corpus());
    for (const auto& e : report.entries)
        o.require(e.passed, e.fixture + " / " + e.property + ": " + e.detail);

    std::vector<Fixture> broken;
    for (const auto& f : faulty_corpus())
        broken.push_back(f.fixture);
    const auto faults = run_property_suite(broken);
    for (const auto& f : faulty_corpus()) {
        bool triggered = false;
        for (const auto& e : faults.entries)
            triggered = triggered || (e.fixture == f.fixture.name && e.property == f.designated_property && !e.passed);
        o.require(triggered, f.fixture.name + " does not trigger '" + f.designated_property + "'");
    }
    if (o.ok)
        o.detail = std::to_string(report.entries.size()) + " checks pass, " + std::to_string(faulty_corpus().size()) +
                   " faults caught";
    return o;
}

Outcome cli()
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("simplicia-acceptance-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
    const auto input = (dir / "triangle.json").string();
    std::ofstream(input, std::ios::binary) << serialize_complex(fixtures::triangle());

    std::string svg[2], json[2];
    for (int run = 0; run < 2; ++run) {
        const auto bsd = (dir / ("bsd" + std::to_string(run) + ".json")).string();
        std::ostringstream out, err;
        o.require(run_cli({"bsd", input, "-n", "2", "--out", bsd}, out, err) == 0, "bsd failed: " + err.str());
        std::ostringstream svg_out, svg_err;
        o.require(run_cli({"export", bsd, "--format", "svg"}, svg_out, svg_err) == 0, "export failed: " + svg_err.str());
        std::ifstream in(bsd, std::ios::binary);
        json[run].assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        svg[run] = svg_out.str();
    }
    o.require(svg[0] == svg[1], "svg differs between runs");
    o.require(json[0] == json[1], "bsd output differs between runs");

    std::istringstream in(json[0]);
    const auto back = read_complex(in, false);
    const auto direct = barycentric_subdivide_n(fixtures::triangle(), 2);
    o.require(label_key(back) == label_key(direct) && geometric_key(back) == geometric_key(direct),
              "reloaded complex differs from the computed one");
    o.require(serialize_complex(back) == json[0], "serialize(load(text)) differs from text");
    std::filesystem::remove_all(dir);
    if (o.ok)
        o.detail = std::to_string(svg[0].size()) + " svg bytes identical, JSON round trip exact";
    return o;
}

}  // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"subdivision counts", kLimitCounts, paper_counts},
        {"construction equivalence", kLimitOracle, oracle_equivalence},
        {"realization preserved", kLimitRealization, realization},
        {"subdivision and transitivity", kLimitTransitivity, transitivity},
        {"star inclusion", kLimitStar, star_lemma},
        {"mesh contraction", kLimitMesh, mesh_contraction},
        {"induced subdivision", kLimitInduced, induced},
        {"property suite", kLimitSuite, suite},
        {"cli determinism", kLimitCli, cli},
    };

    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && seconds > c.limit) {
            o.ok = false;
            o.detail = "over the time limit; " + o.detail;
        }
        failed += !o.ok;
        std::printf("%s %d %-29s %7.2fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL", index, c.name, seconds, c.limit,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
