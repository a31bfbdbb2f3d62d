#pragma once

#include "simplicia/complex.hpp"
#include "simplicia/complex_ops.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace simplicia {

/// Reads the canonical complex document:
///
///   { "ambient_dim": 2,
///     "vertices": { "A": ["0","0"], "B": ["1","0"], "C": ["1/5","9/10"] },
///     "simplices": [ ["A","B","C"], ["A","D"] ] }
///
/// Coordinates are "p/q" or decimal strings (JSON numbers are accepted when
/// integral). "simplices" may list maximal simplices only; with
/// `close_faces` every face is added.
/// Throws StructuralError for unknown vertices or malformed documents.
GeometricComplex complex_from_json(const nlohmann::json& doc, bool close_faces = true);

/// Canonical form: full simplex list, labels sorted within each simplex, the
/// list ordered by (dimension, labels), exact rational coordinate strings.
nlohmann::json complex_to_json(const GeometricComplex& k);

GeometricComplex read_complex(std::istream& in, bool close_faces = true);
/// Throws std::ios_base::failure when the file cannot be opened.
GeometricComplex load_complex(const std::filesystem::path& path, bool close_faces = true);
std::string serialize_complex(const GeometricComplex& k);

nlohmann::json report_to_json(const ValidationReport& report);

}  // namespace simplicia
