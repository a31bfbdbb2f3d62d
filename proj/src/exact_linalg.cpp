#include "simplicia/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace simplicia {

void RationalMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// Reduces m in place to row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t col_limit, int* sign = nullptr)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row) {
            m.swap_rows(pivot, row);
            if (sign)
                *sign = -*sign;
        }
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (sgn(m(r, col)) == 0)
                continue;
            Rational factor = m(r, col) / m(row, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m)
{
    return echelon(m, m.cols()).size();
}

Rational determinant(RationalMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    int sign = 1;
    auto pivots = echelon(m, m.cols(), &sign);
    if (pivots.size() < m.rows())
        return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i)
        det *= m(i, i);
    return det;
}

std::optional<std::vector<Rational>> solve_full_column_rank(RationalMatrix a, std::vector<Rational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side size mismatch");
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = std::move(a(r, c));
        aug(r, n) = std::move(b[r]);
    }
    auto pivots = echelon(aug, n);
    if (pivots.size() < n)
        throw std::invalid_argument("solve: matrix is column-rank deficient");
    for (std::size_t r = n; r < aug.rows(); ++r) {
        if (sgn(aug(r, n)) != 0)
            return std::nullopt;
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = aug(i, n);
        for (std::size_t c = i + 1; c < n; ++c)
            acc -= aug(i, c) * x[c];
        x[i] = acc / aug(i, i);
    }
    return x;
}

bool affinely_independent(std::span<const Point> points)
{
    if (points.empty())
        return false;
    const std::size_t d = points.front().dim();
    const std::size_t k = points.size() - 1;
    if (k > d)
        return false;
    if (k == 0)
        return true;
    RationalMatrix edges(k, d);
    for (std::size_t i = 1; i <= k; ++i) {
        if (points[i].dim() != d)
            throw std::invalid_argument("affinely_independent: dimension mismatch");
        for (std::size_t c = 0; c < d; ++c)
            edges(i - 1, c) = points[i][c] - points[0][c];
    }
    return rank(std::move(edges)) == k;
}

std::optional<std::vector<Rational>> affine_coordinates(std::span<const Point> points, const Point& x)
{
    if (points.empty())
        throw std::invalid_argument("affine_coordinates: no points");
    const std::size_t d = points.front().dim();
    if (x.dim() != d)
        throw std::invalid_argument("affine_coordinates: dimension mismatch");
    RationalMatrix a(d + 1, points.size());
    std::vector<Rational> b(d + 1);
    for (std::size_t c = 0; c < points.size(); ++c) {
        for (std::size_t r = 0; r < d; ++r)
            a(r, c) = points[c][r];
        a(d, c) = 1;
    }
    for (std::size_t r = 0; r < d; ++r)
        b[r] = x[r];
    b[d] = 1;
    return solve_full_column_rank(std::move(a), std::move(b));
}

RationalMatrix inverse(RationalMatrix m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("inverse of non-square matrix");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        inv(i, i) = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m(pivot, col)) == 0)
            ++pivot;
        if (pivot == n)
            throw std::invalid_argument("inverse of singular matrix");
        m.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        Rational p = m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m(r, col)) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) -= f * m(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

AffineFrame::AffineFrame(std::span<const Point> points)
{
    if (points.empty())
        throw std::invalid_argument("AffineFrame: no points");
    origin_ = points.front();
    const std::size_t d = origin_.dim();
    const std::size_t k = points.size() - 1;
    edges_ = RationalMatrix(d, k);
    for (std::size_t j = 0; j < k; ++j) {
        if (points[j + 1].dim() != d)
            throw std::invalid_argument("AffineFrame: dimension mismatch");
        for (std::size_t a = 0; a < d; ++a)
            edges_(a, j) = points[j + 1][a] - points[0][a];
    }
    // Greedily keep coordinate rows that extend the rank of the edge block.
    for (std::size_t a = 0; a < d && pivot_rows_.size() < k; ++a) {
        RationalMatrix trial(pivot_rows_.size() + 1, k);
        for (std::size_t r = 0; r < pivot_rows_.size(); ++r) {
            for (std::size_t j = 0; j < k; ++j)
                trial(r, j) = edges_(pivot_rows_[r], j);
        }
        for (std::size_t j = 0; j < k; ++j)
            trial(pivot_rows_.size(), j) = edges_(a, j);
        if (rank(std::move(trial)) == pivot_rows_.size() + 1)
            pivot_rows_.push_back(a);
    }
    if (pivot_rows_.size() != k)
        throw std::invalid_argument("AffineFrame: points are affinely dependent");
    RationalMatrix block(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < k; ++j)
            block(r, j) = edges_(pivot_rows_[r], j);
    }
    inverse_ = k ? inverse(std::move(block)) : RationalMatrix(0, 0);
}

std::optional<std::vector<Rational>> AffineFrame::coordinates(const Point& x) const
{
    const std::size_t d = origin_.dim();
    if (x.dim() != d)
        throw std::invalid_argument("AffineFrame: point dimension mismatch");
    const std::size_t k = pivot_rows_.size();
    std::vector<Rational> offset(k);
    for (std::size_t c = 0; c < k; ++c)
        offset[c] = x[pivot_rows_[c]] - origin_[pivot_rows_[c]];
    std::vector<Rational> mu(k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            mu[r] += inverse_(r, c) * offset[c];
    }
    std::size_t next_pivot = 0;
    for (std::size_t a = 0; a < d; ++a) {
        if (next_pivot < k && pivot_rows_[next_pivot] == a) {
            ++next_pivot;
            continue;
        }
        Rational reconstructed = origin_[a];
        for (std::size_t j = 0; j < k; ++j)
            reconstructed += edges_(a, j) * mu[j];
        if (reconstructed != x[a])
            return std::nullopt;
    }
    std::vector<Rational> weights(k + 1);
    weights[0] = 1;
    for (std::size_t j = 0; j < k; ++j) {
        weights[0] -= mu[j];
        weights[j + 1] = std::move(mu[j]);
    }
    return weights;
}

}  // namespace simplicia
