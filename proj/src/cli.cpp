#include "simplicia/cli.hpp"

#include "simplicia/complex_json.hpp"
#include "simplicia/complex_ops.hpp"
#include "simplicia/export.hpp"
#include "simplicia/metric.hpp"
#include "simplicia/stars.hpp"
#include "simplicia/subdivision.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace simplicia {

namespace {

struct Failure
{
    int code;
    std::string message;
};

struct Options
{
    std::string complex;
    std::string out;
    std::string metric = "linf";
    int n = 1;
    std::string eps;
    bool csv = false;
    bool exact = false;
    bool as_given = false;
    std::string vertex;
    std::string point;
    std::string fine;
    std::string sub;
    std::string format = "svg";
};

GeometricComplex load(const std::string& path, bool close_faces = true)
{
    try {
        return load_complex(path, close_faces);
    } catch (const std::ios_base::failure& e) {
        throw Failure{kExitIo, e.what()};
    } catch (const nlohmann::json::exception& e) {
        throw Failure{kExitInvalidComplex, path + ": " + e.what()};
    } catch (const StructuralError& e) {
        throw Failure{kExitInvalidComplex, path + ": " + e.what()};
    } catch (const std::invalid_argument& e) {
        throw Failure{kExitInvalidComplex, path + ": " + e.what()};
    }
}

GeometricComplex load_valid(const std::string& path)
{
    GeometricComplex k = load(path);
    auto report = validate_complex(k);
    if (!report.valid())
        throw Failure{kExitInvalidComplex, path + " is not a valid complex:\n" + report.to_string()};
    return k;
}

MetricKind metric_of(const Options& o)
{
    try {
        return parse_metric(o.metric);
    } catch (const std::invalid_argument& e) {
        throw Failure{kExitUsage, e.what()};
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n ") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render_rational(const Rational& q, bool exact)
{
    return exact ? to_string(q) : to_decimal(q, 6);
}

/// Rows of cells printed as aligned columns or CSV.
std::string table(const std::vector<std::vector<std::string>>& rows, bool csv)
{
    std::ostringstream out;
    if (csv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        return out.str();
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

std::string cmd_validate(const Options& o)
{
    GeometricComplex k = load(o.complex, !o.as_given);
    auto report = validate_complex(k);
    std::ostringstream out;
    if (!report.valid())
        throw Failure{kExitInvalidComplex, report.to_string()};
    out << "valid\n"
        << "ambient_dim " << k.ambient_dim() << '\n'
        << "dimension " << k.dimension() << '\n'
        << "vertices " << k.vertex_count() << '\n'
        << "f_vector";
    for (auto f : k.f_vector())
        out << ' ' << f;
    out << '\n';
    return out.str();
}

std::string cmd_bsd(const Options& o)
{
    if (o.n < 0)
        throw Failure{kExitUsage, "-n must be non-negative"};
    return serialize_complex(barycentric_subdivide_n(load_valid(o.complex), o.n));
}

std::string cmd_star(const Options& o)
{
    const GeometricComplex k = load_valid(o.complex);
    if (o.vertex.empty())
        throw Failure{kExitUsage, "star needs --vertex LABEL"};
    OpenStar star;
    try {
        star = open_star(k, o.vertex);
    } catch (const StructuralError& e) {
        throw Failure{kExitInvalidComplex, e.what()};
    }
    std::ostringstream out;
    for (const auto& piece : star.pieces)
        out << k.name_of(piece) << '\n';
    return out.str();
}

std::string cmd_carrier(const Options& o)
{
    const GeometricComplex k = load_valid(o.complex);
    Point x;
    try {
        x = parse_point(o.point);
    } catch (const std::invalid_argument& e) {
        throw Failure{kExitUsage, std::string("--point: ") + e.what()};
    }
    if (x.dim() != k.ambient_dim())
        throw Failure{kExitUnsupportedDimension, "point has " + std::to_string(x.dim()) +
                                                     " coordinates, the complex lives in dimension " +
                                                     std::to_string(k.ambient_dim())};
    auto c = carrier(k, x);
    return (c ? k.name_of(*c) : std::string("outside")) + "\n";
}

SubdivisionWitness require_subdivision(const GeometricComplex& fine, const GeometricComplex& coarse)
{
    if (fine.ambient_dim() != coarse.ambient_dim())
        throw Failure{kExitUnsupportedDimension, "fine and coarse complexes have different ambient dimensions"};
    auto r = is_subdivision(fine, coarse);
    if (auto* refutation = std::get_if<Refutation>(&r))
        throw Failure{kExitCheckFailed, "not a subdivision: condition " + std::to_string(refutation->condition) +
                                            " fails on " + refutation->simplex + ": " + refutation->detail};
    return std::get<SubdivisionWitness>(std::move(r));
}

std::string cmd_induced(const Options& o)
{
    if (o.sub.empty())
        throw Failure{kExitUsage, "induced needs --sub FILE"};
    const GeometricComplex k = load_valid(o.complex);
    const GeometricComplex sub = load_valid(o.sub);
    GeometricComplex fine;
    SubdivisionWitness witness;
    if (o.fine.empty()) {
        Subdivision bsd = barycentric_subdivide(k);
        fine = std::move(bsd.complex);
        witness = std::move(bsd.witness);
    } else {
        fine = load_valid(o.fine);
        witness = require_subdivision(fine, k);
    }
    try {
        return serialize_complex(induced_subdivision(fine, sub, k, witness));
    } catch (const StructuralError& e) {
        throw Failure{kExitInvalidComplex, e.what()};
    }
}

std::string cmd_check(const Options& o)
{
    if (o.fine.empty())
        throw Failure{kExitUsage, "check-subdivision needs --fine FILE"};
    const GeometricComplex k = load_valid(o.complex);
    const GeometricComplex fine = load_valid(o.fine);
    if (fine.ambient_dim() != k.ambient_dim())
        throw Failure{kExitUnsupportedDimension, "fine and coarse complexes have different ambient dimensions"};
    auto r = is_subdivision(fine, k);
    std::ostringstream out;
    if (auto* refutation = std::get_if<Refutation>(&r)) {
        out << "subdivision no\n"
            << "condition " << refutation->condition << '\n'
            << "simplex " << refutation->simplex << '\n'
            << "detail " << refutation->detail << '\n';
        if (refutation->condition == 2)
            out << "covered_fraction " << render_rational(refutation->covered_fraction, o.exact) << '\n'
                << "deficit_volume_squared " << render_rational(refutation->deficit_volume_squared, o.exact) << '\n';
        throw Failure{kExitCheckFailed, out.str()};
    }
    const auto& w = std::get<SubdivisionWitness>(r);
    std::size_t covered = 0;
    for (const auto& c : w.covering)
        covered += !c.empty();
    out << "subdivision yes\n"
        << "fine_simplices " << w.refinement.size() << '\n'
        << "coarse_simplices " << covered << '\n';
    return out.str();
}

std::string cmd_mesh(const Options& o)
{
    const GeometricComplex k = load_valid(o.complex);
    const MetricKind kind = metric_of(o);
    const MeshReport report = mesh(k, kind);
    std::vector<std::vector<std::string>> rows{{"simplex", "diameter"}};
    for (std::size_t index : k.maximal()) {
        const Simplex& s = k.simplex(index);
        rows.push_back({k.name_of(s), report.per_simplex.at(s).render(o.exact)});
    }
    std::ostringstream out;
    if (!o.csv)
        out << "metric " << to_string(kind) << '\n'
            << "mesh " << report.mesh.render(o.exact) << '\n'
            << "contraction_bound " << to_string(report.contraction_bound) << '\n';
    else
        rows.push_back({"mesh", report.mesh.render(o.exact)});
    out << table(rows, o.csv);
    return out.str();
}

std::string census(const GeometricComplex& k, const GeometricComplex& fine, const SubdivisionWitness& w)
{
    std::string out;
    for (std::size_t index : k.maximal()) {
        const Simplex& s = k.simplex(index);
        std::size_t count = 0;
        for (std::size_t i : w.covering[index])
            count += fine.simplex(i).dim() == s.dim();
        out += (out.empty() ? "" : " ") + k.name_of(s) + ":" + std::to_string(count);
    }
    return out;
}

std::string cmd_decay(const Options& o)
{
    if (o.n < 0)
        throw Failure{kExitUsage, "-n must be non-negative"};
    const GeometricComplex k = load_valid(o.complex);
    const MetricKind kind = metric_of(o);
    std::optional<Rational> eps;
    if (!o.eps.empty()) {
        try {
            eps = parse_rational(o.eps);
        } catch (const std::invalid_argument& e) {
            throw Failure{kExitUsage, std::string("--eps: ") + e.what()};
        }
        if (sgn(*eps) <= 0)
            throw Failure{kExitUsage, "--eps must be positive"};
    }

    const Length initial = mesh_value(k, kind);
    const Rational c = contraction_factor(k.dimension());
    std::vector<std::vector<std::string>> rows{{"m", "simplices", "mesh", "bound", "ratio", "census"}};
    Subdivision current{k, SubdivisionWitness::identity(k)};
    Rational factor = 1;
    for (int m = 0; m <= o.n; ++m) {
        if (m > 0) {
            Subdivision next = barycentric_subdivide(current.complex);
            next.witness = compose(next.complex, k, next.witness, current.witness);
            current = std::move(next);
            factor *= c;
        }
        const Length value = mesh_value(current.complex, kind);
        const Length bound = initial.scaled(factor);
        std::string ratio = "-";
        if (sgn(bound.measure) > 0) {
            const Rational r = value.measure / bound.measure;
            if (kind == MetricKind::L2)
                ratio = o.exact ? "sqrt(" + to_string(r) + ")" : Length{r, kind}.render(false);
            else
                ratio = render_rational(r, o.exact);
        }
        rows.push_back({std::to_string(m), std::to_string(current.complex.size()), value.render(o.exact),
                        bound.render(o.exact), ratio, census(k, current.complex, current.witness)});
    }
    std::string out = table(rows, o.csv);
    if (eps) {
        const IterationCount count = subdivisions_needed(k, *eps, kind);
        const char* sep = o.csv ? "," : " ";
        out += std::string("N_bound") + sep + std::to_string(count.bound) + "\n" + "N_actual" + sep +
               std::to_string(count.actual) + "\n" + "final_mesh" + sep + count.final_mesh.render(o.exact) + "\n";
    }
    return out;
}

std::string cmd_export(const Options& o)
{
    const GeometricComplex k = load_valid(o.complex);
    try {
        if (o.format == "svg")
            return to_svg(k);
        if (o.format == "off")
            return to_off(k);
    } catch (const UnsupportedDimension& e) {
        throw Failure{kExitUnsupportedDimension, e.what()};
    }
    throw Failure{kExitUsage, "unknown format '" + o.format + "' (expected svg or off)"};
}

void emit(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw Failure{kExitIo, "cannot write " + o.out};
    file << text;
    if (!file)
        throw Failure{kExitIo, "cannot write " + o.out};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact simplicial complexes: subdivision, stars, mesh decay and export.", "simplicia"};
    app.require_subcommand(1);
    Options o;
    std::function<std::string(const Options&)> action;

    auto command = [&](const std::string& name, const std::string& help,
                       std::function<std::string(const Options&)> body) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("complex", o.complex, "Complex JSON file")->required();
        sub->add_option("--out", o.out, "Write the result to PATH instead of stdout");
        sub->callback([&action, body] { action = body; });
        return sub;
    };

    auto* validate = command("validate", "Check face closure, affine independence and properness", cmd_validate);
    validate->add_flag("--as-given", o.as_given, "Do not close the simplex list under faces before checking");
    command("closure", "Print the complex with every face listed, in canonical form",
            [](const Options& opt) { return serialize_complex(load_valid(opt.complex)); });
    command("bsd", "n-th barycentric subdivision", cmd_bsd)->add_option("-n", o.n, "Number of iterations (default 1)");
    command("star", "Simplices whose interiors make up the open star of a vertex", cmd_star)
        ->add_option("--vertex", o.vertex, "Vertex label");
    command("carrier", "Simplex whose relative interior holds a point", cmd_carrier)
        ->add_option("--point", o.point, "Coordinates x,y,...")
        ->required();
    auto* induced = command("induced", "Subdivision of a subcomplex induced by a subdivision", cmd_induced);
    induced->add_option("--fine", o.fine, "Subdivision of the complex (default: its barycentric subdivision)");
    induced->add_option("--sub", o.sub, "Subcomplex of the complex");
    command("check-subdivision", "Decide whether --fine subdivides the complex", cmd_check)
        ->add_option("--fine", o.fine, "Candidate subdivision");
    auto* mesh_cmd = command("mesh", "Simplex diameters and mesh", cmd_mesh);
    auto* decay = command("decay", "Mesh of iterated barycentric subdivisions against the contraction bound", cmd_decay);
    decay->add_option("-n", o.n, "Highest iterate (default 1)");
    decay->add_option("--eps", o.eps, "Also report the iterations needed to push the mesh below EPS");
    for (CLI::App* sub : {mesh_cmd, decay}) {
        sub->add_option("--metric", o.metric, "linf (default) or l2");
        sub->add_flag("--csv", o.csv, "CSV instead of aligned columns");
    }
    for (CLI::App* sub : {mesh_cmd, decay, app.get_subcommand("check-subdivision")})
        sub->add_flag("--exact", o.exact, "Exact rationals instead of 6 significant digits");
    command("export", "Render as SVG (planar) or OFF (dimension <= 3)", cmd_export)
        ->add_option("--format", o.format, "svg (default) or off");

    std::vector<const char*> argv{"simplicia"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        emit(action(o), o, out);
        return kExitOk;
    } catch (const Failure& f) {
        // A failed check still reports its findings on the primary stream.
        if (f.code == kExitCheckFailed && !o.out.empty()) {
            try {
                emit(f.message, o, out);
            } catch (const Failure& g) {
                err << g.message << '\n';
                return g.code;
            }
        } else {
            (f.code == kExitCheckFailed ? out : err) << f.message << (f.message.ends_with('\n') ? "" : "\n");
        }
        return f.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidComplex;
    }
}

}  // namespace simplicia
