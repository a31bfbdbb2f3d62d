#pragma once

#include "simplicia/complex.hpp"

#include <stdexcept>
#include <string>

namespace simplicia {

/// Raised when a complex cannot be drawn in the requested format.
class UnsupportedDimension : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct SvgOptions
{
    int canvas = 480;
    int margin = 32;
    /// Vertex labels are drawn only for complexes with at most this many
    /// vertices; beyond that they would overlap.
    std::size_t label_limit = 40;
};

/// SVG 1.1 drawing of a planar complex: filled 2-simplices, stroked
/// 1-simplices, dotted vertices. The bounding box is mapped to a fixed
/// square canvas with y pointing up. Throws UnsupportedDimension unless
/// ambient_dim == 2.
std::string to_svg(const GeometricComplex& k, const SvgOptions& options = {});

/// ASCII OFF: vertices padded to three coordinates, then every 2-simplex
/// as a triangular face. Throws UnsupportedDimension when ambient_dim > 3.
std::string to_off(const GeometricComplex& k);

}  // namespace simplicia
