#include "simplicia/export.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace simplicia {

namespace {

constexpr std::array<std::array<int, 3>, 12> kPalette{{{239, 83, 80},
                                                       {255, 167, 38},
                                                       {255, 238, 88},
                                                       {102, 187, 106},
                                                       {38, 198, 218},
                                                       {66, 165, 245},
                                                       {171, 71, 188},
                                                       {255, 112, 67},
                                                       {156, 204, 101},
                                                       {77, 208, 225},
                                                       {144, 202, 249},
                                                       {186, 104, 200}}};

// 45% of the colour over white.
std::string tint(std::size_t index)
{
    const auto& c = kPalette[index % kPalette.size()];
    char buffer[8];
    std::snprintf(buffer, sizeof buffer, "#%02x%02x%02x", (c[0] * 45 + 255 * 55 + 50) / 100,
                  (c[1] * 45 + 255 * 55 + 50) / 100, (c[2] * 45 + 255 * 55 + 50) / 100);
    return buffer;
}

std::string fixed(double v)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    std::string s = buffer;
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_svg(const GeometricComplex& k, const SvgOptions& options)
{
    if (k.ambient_dim() != 2)
        throw UnsupportedDimension("svg export needs a planar complex, got ambient dimension " +
                                   std::to_string(k.ambient_dim()));
    const int canvas = options.canvas;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << ' ' << canvas << "\">\n"
        << "<rect width=\"" << canvas << "\" height=\"" << canvas << "\" fill=\"#ffffff\"/>\n";
    if (k.empty()) {
        out << "</svg>\n";
        return out.str();
    }

    Rational lo_x = k.point(0)[0], hi_x = lo_x, lo_y = k.point(0)[1], hi_y = lo_y;
    for (const auto& v : k.vertices()) {
        lo_x = std::min(lo_x, v.point[0]);
        hi_x = std::max(hi_x, v.point[0]);
        lo_y = std::min(lo_y, v.point[1]);
        hi_y = std::max(hi_y, v.point[1]);
    }
    Rational extent = std::max(Rational(hi_x - lo_x), Rational(hi_y - lo_y));
    if (sgn(extent) == 0)
        extent = 1;
    const Rational scale = Rational(canvas - 2 * options.margin) / extent;
    // Centre the drawing; y grows downward in SVG.
    const Rational offset_x = Rational(canvas) / 2 - scale * (lo_x + hi_x) / 2;
    const Rational offset_y = Rational(canvas) / 2 + scale * (lo_y + hi_y) / 2;
    auto sx = [&](VertexId v) { return fixed(Rational(offset_x + scale * k.point(v)[0]).get_d()); };
    auto sy = [&](VertexId v) { return fixed(Rational(offset_y - scale * k.point(v)[1]).get_d()); };

    out << "<g fill-opacity=\"1\" stroke=\"none\">\n";
    std::size_t face = 0;
    for (const auto& s : k.simplices()) {
        if (s.dim() != 2)
            continue;
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < 3; ++i)
            out << (i ? " " : "") << sx(s[i]) << ',' << sy(s[i]);
        out << "\" fill=\"" << tint(face++) << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"#333333\" stroke-width=\"1.2\" stroke-linecap=\"round\">\n";
    for (const auto& s : k.simplices()) {
        if (s.dim() != 1)
            continue;
        out << "<line x1=\"" << sx(s[0]) << "\" y1=\"" << sy(s[0]) << "\" x2=\"" << sx(s[1]) << "\" y2=\"" << sy(s[1])
            << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#000000\">\n";
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        out << "<circle cx=\"" << sx(v) << "\" cy=\"" << sy(v) << "\" r=\"2.5\"/>\n";
    out << "</g>\n";
    if (k.vertex_count() <= options.label_limit) {
        out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
        for (VertexId v = 0; v < k.vertex_count(); ++v)
            out << "<text x=\"" << fixed(Rational(offset_x + scale * k.point(v)[0]).get_d() + 4) << "\" y=\""
                << fixed(Rational(offset_y - scale * k.point(v)[1]).get_d() - 4) << "\">" << escape(k.label(v))
                << "</text>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string to_off(const GeometricComplex& k)
{
    if (k.ambient_dim() > 3)
        throw UnsupportedDimension("off export needs ambient dimension at most 3, got " +
                                   std::to_string(k.ambient_dim()));
    std::size_t faces = 0;
    for (const auto& s : k.simplices())
        faces += s.dim() == 2;
    std::ostringstream out;
    out << "OFF\n" << k.vertex_count() << ' ' << faces << " 0\n";
    char buffer[32];
    for (const auto& v : k.vertices()) {
        for (std::size_t a = 0; a < 3; ++a) {
            std::snprintf(buffer, sizeof buffer, "%.17g", a < v.point.dim() ? v.point[a].get_d() : 0.0);
            out << (a ? " " : "") << buffer;
        }
        out << '\n';
    }
    for (const auto& s : k.simplices())
        if (s.dim() == 2)
            out << "3 " << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
    return out.str();
}

}  // namespace simplicia
