#pragma once

#include "simplicia/point.hpp"
#include "simplicia/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace simplicia {

/// Dense row-major matrix of exact rationals.
class RationalMatrix
{
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Determinant of a square matrix by Gaussian elimination.
Rational determinant(RationalMatrix m);

/// Solves A x = b when A has full column rank. Returns nullopt when the
/// system is inconsistent. Throws std::invalid_argument on rank deficiency.
std::optional<std::vector<Rational>> solve_full_column_rank(RationalMatrix a, std::vector<Rational> b);

/// Rank of the edge matrix [p_i - p_0] equals points.size() - 1.
bool affinely_independent(std::span<const Point> points);

/// Weights lambda with sum 1 and sum lambda_i * p_i = x, or nullopt when x is
/// outside the affine hull. The points must be affinely independent.
std::optional<std::vector<Rational>> affine_coordinates(std::span<const Point> points, const Point& x);

/// Precomputed solver for barycentric coordinates relative to a fixed set of
/// affinely independent points. Construction throws std::invalid_argument
/// when the points are affinely dependent.
class AffineFrame
{
public:
    AffineFrame() = default;
    explicit AffineFrame(std::span<const Point> points);

    std::size_t ambient_dim() const { return origin_.dim(); }
    std::size_t simplex_dim() const { return pivot_rows_.size(); }

    /// Weights summing to 1 that reproduce x, or nullopt off the affine hull.
    std::optional<std::vector<Rational>> coordinates(const Point& x) const;

private:
    std::vector<std::size_t> pivot_rows_;
    RationalMatrix inverse_;
    RationalMatrix edges_;
    Point origin_;
};

/// Inverse of a nonsingular square matrix (Gauss-Jordan).
RationalMatrix inverse(RationalMatrix m);

}  // namespace simplicia
