#include "simplicia/complex_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace simplicia {

using nlohmann::json;

namespace {

Rational coordinate_from_json(const json& value, const std::string& label)
{
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(value.get<long>());
    throw StructuralError("coordinate of vertex '" + label + "' must be a rational string");
}

}  // namespace

GeometricComplex complex_from_json(const json& doc, bool close_faces)
{
    if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("vertices"))
        throw StructuralError("complex document needs 'ambient_dim' and 'vertices'");
    const auto& dim_value = doc.at("ambient_dim");
    if (!dim_value.is_number_integer() || dim_value.get<long>() < 0)
        throw StructuralError("'ambient_dim' must be a non-negative integer");
    const auto d = static_cast<std::size_t>(dim_value.get<long>());

    ComplexBuilder b(d);
    const auto& vertices = doc.at("vertices");
    if (!vertices.is_object())
        throw StructuralError("'vertices' must be an object of label -> coordinates");
    for (const auto& [label, coords] : vertices.items()) {
        if (!coords.is_array())
            throw StructuralError("coordinates of vertex '" + label + "' must be an array");
        std::vector<Rational> values;
        for (const auto& c : coords)
            values.push_back(coordinate_from_json(c, label));
        b.add_vertex(label, Point(std::move(values)));
    }

    if (doc.contains("simplices")) {
        const auto& simplices = doc.at("simplices");
        if (!simplices.is_array())
            throw StructuralError("'simplices' must be an array");
        for (const auto& entry : simplices) {
            if (!entry.is_array() || entry.empty())
                throw StructuralError("each simplex must be a nonempty array of labels");
            Simplex::Storage ids;
            std::string name = entry.dump();
            for (const auto& l : entry) {
                if (!l.is_string())
                    throw StructuralError("simplex " + name + " has a non-string vertex label");
                auto v = b.find_vertex(l.get<std::string>());
                if (!v)
                    throw StructuralError("simplex " + name + " refers to unknown vertex '" + l.get<std::string>() + "'");
                ids.push_back(*v);
            }
            Simplex s;
            try {
                s = Simplex(std::move(ids));
            } catch (const StructuralError&) {
                throw StructuralError("simplex " + name + " repeats a vertex");
            }
            if (close_faces)
                b.add_closed(s);
            else
                b.add_simplex(s);
        }
    }
    return std::move(b).build();
}

json complex_to_json(const GeometricComplex& k)
{
    json doc;
    doc["ambient_dim"] = k.ambient_dim();
    json vertices = json::object();
    for (const auto& v : k.vertices()) {
        json coords = json::array();
        for (const auto& c : v.point.coords())
            coords.push_back(to_string(c));
        vertices[v.label] = std::move(coords);
    }
    doc["vertices"] = std::move(vertices);

    std::vector<std::vector<std::string>> simplices;
    simplices.reserve(k.size());
    for (const auto& s : k.simplices())
        simplices.push_back(k.labels_of(s));
    std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    doc["simplices"] = simplices;
    return doc;
}

GeometricComplex read_complex(std::istream& in, bool close_faces)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(doc, close_faces);
}

GeometricComplex load_complex(const std::filesystem::path& path, bool close_faces)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open '" + path.string() + "'");
    return read_complex(in, close_faces);
}

std::string serialize_complex(const GeometricComplex& k)
{
    return complex_to_json(k).dump(2) + "\n";
}

json report_to_json(const ValidationReport& report)
{
    json out = json::array();
    for (const auto& v : report.violations)
        out.push_back({{"kind", to_string(v.kind)}, {"simplices", v.simplices}, {"message", v.message}});
    return out;
}

}  // namespace simplicia
