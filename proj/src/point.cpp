#include "simplicia/point.hpp"

#include <stdexcept>

namespace simplicia {

Point& Point::operator+=(const Point& other)
{
    if (other.dim() != dim())
        throw std::invalid_argument("point dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Point& Point::operator-=(const Point& other)
{
    if (other.dim() != dim())
        throw std::invalid_argument("point dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

Point& Point::operator*=(const Rational& s)
{
    for (auto& c : coords_)
        c *= s;
    return *this;
}

Point& Point::operator/=(const Rational& s)
{
    if (s == 0)
        throw std::domain_error("division of point by zero");
    for (auto& c : coords_)
        c /= s;
    return *this;
}

bool operator<(const Point& a, const Point& b)
{
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

Point affine_combination(std::span<const Point> points, std::span<const Rational> weights)
{
    if (points.empty() || points.size() != weights.size())
        throw std::invalid_argument("affine_combination: size mismatch");
    Point result = Point::zero(points.front().dim());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].dim() != result.dim())
            throw std::invalid_argument("affine_combination: dimension mismatch");
        for (std::size_t k = 0; k < result.dim(); ++k)
            result[k] += weights[i] * points[i][k];
    }
    return result;
}

Point centroid(std::span<const Point> points)
{
    if (points.empty())
        throw std::invalid_argument("centroid of no points");
    Point sum = Point::zero(points.front().dim());
    for (const auto& p : points)
        sum += p;
    return sum / Rational(static_cast<long>(points.size()));
}

Point midpoint(const Point& a, const Point& b)
{
    return (a + b) / Rational(2);
}

std::string to_string(const Point& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i)
            out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

Point parse_point(std::string_view text)
{
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coords.push_back(parse_rational(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Point(std::move(coords));
}

}  // namespace simplicia
