#pragma once

#include "simplicia/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simplicia {

/// A point of the ambient coordinate space with exact rational coordinates.
class Point
{
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim, Rational(0))); }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    Point& operator+=(const Point& other);
    Point& operator-=(const Point& other);
    Point& operator*=(const Rational& s);
    Point& operator/=(const Rational& s);

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(const Rational& s, Point a) { return a *= s; }
    friend Point operator/(Point a, const Rational& s) { return a /= s; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    /// Lexicographic on coordinates; shorter points first.
    friend bool operator<(const Point& a, const Point& b);

private:
    std::vector<Rational> coords_;
};

/// Sum of weights[i] * points[i]; the weights are not required to sum to one.
Point affine_combination(std::span<const Point> points, std::span<const Rational> weights);

/// Arithmetic mean of the points (the barycenter of their convex hull when
/// they are affinely independent).
Point centroid(std::span<const Point> points);

Point midpoint(const Point& a, const Point& b);

/// "(x, y, ...)" with canonical rational coordinates.
std::string to_string(const Point& p);

/// Parses "x,y,..." (each coordinate a rational string).
Point parse_point(std::string_view text);

}  // namespace simplicia
