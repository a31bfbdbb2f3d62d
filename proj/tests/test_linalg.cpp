#include "helpers.hpp"

#include "simplicia/exact_linalg.hpp"
#include "simplicia/exact_lp.hpp"
#include "simplicia/verification.hpp"

#include <doctest.h>

#include <random>

using namespace simplicia;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
{
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(r, c) = rows[r][c];
    return m;
}

std::vector<std::vector<Rational>> random_rows(std::mt19937& rng, std::size_t n)
{
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (auto& row : rows)
        for (auto& x : row)
            x = testing::q(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    return rows;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion on random matrices")
{
    std::mt19937 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            auto rows = random_rows(rng, n);
            CHECK(determinant(from_rows(rows)) == oracle::laplace_determinant(rows));
        }
    }
}

TEST_CASE("determinant and rank of singular matrices")
{
    auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(determinant(m) == 0);
    CHECK(rank(m) == 2);
    CHECK(rank(RationalMatrix(3, 2)) == 0);
    CHECK(determinant(from_rows({{Rational(1, 2), 0}, {0, 4}})) == 2);
}

TEST_CASE("inverse times matrix is the identity")
{
    auto m = from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    auto inv = inverse(m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 3; ++k)
                s += m(i, k) * inv(k, j);
            CHECK(s == (i == j ? 1 : 0));
        }
}

TEST_CASE("solve_full_column_rank on consistent and inconsistent systems")
{
    auto a = from_rows({{1, 0}, {0, 1}, {1, 1}});
    auto x = solve_full_column_rank(a, {2, 3, 5});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK_FALSE(solve_full_column_rank(a, {2, 3, 6}));
}

TEST_CASE("affine independence")
{
    const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
    const std::vector<Point> line{{0, 0}, {1, 1}, {2, 2}};
    const std::vector<Point> four{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(affinely_independent(tri));
    CHECK_FALSE(affinely_independent(line));
    CHECK_FALSE(affinely_independent(four));
    const std::vector<Point> single{{Rational(3), Rational(7)}};
    CHECK(affinely_independent(single));
}

TEST_CASE("affine coordinates of a segment embedded in 3-space")
{
    const std::vector<Point> seg{{0, 0, 0}, {2, 2, 2}};
    auto c = affine_coordinates(seg, Point{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    REQUIRE(c);
    CHECK((*c)[0] == Rational(3, 4));
    CHECK((*c)[1] == Rational(1, 4));
    CHECK_FALSE(affine_coordinates(seg, Point{1, 0, 0}));

    AffineFrame frame(seg);
    CHECK(frame.simplex_dim() == 1);
    CHECK(frame.ambient_dim() == 3);
    auto f = frame.coordinates(Point{3, 3, 3});
    REQUIRE(f);
    CHECK((*f)[0] == Rational(-1, 2));
    CHECK((*f)[1] == Rational(3, 2));
}

TEST_CASE("affine frame coordinates agree with Cramer's rule")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rational> c;
            for (int j = 0; j < 3; ++j)
                c.push_back(testing::q(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 3) + 1));
            pts.emplace_back(std::move(c));
        }
        if (!affinely_independent(pts))
            continue;
        Point x{testing::q(static_cast<long>(rng() % 7), 3), Rational(1, 5), Rational(-2, 7)};
        auto a = AffineFrame(pts).coordinates(x);
        auto b = oracle::cramer_coordinates(pts, x);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a == *b);
    }
}

TEST_CASE("linear program: optimal, infeasible, unbounded")
{
    // maximize x + y subject to x + s = 1, y + t = 2, all variables >= 0
    lp::Problem p{from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}), {1, 2}, {1, 1, 0, 0}};
    auto s = lp::maximize(p);
    CHECK(s.status == lp::Status::Optimal);
    CHECK(s.value == 3);

    lp::Problem infeasible{from_rows({{1, 1}}), {-1}, {1, 0}};
    CHECK(lp::maximize(infeasible).status == lp::Status::Infeasible);

    // x - y = 0 with x, y unbounded above
    lp::Problem unbounded{from_rows({{1, -1}}), {0}, {1, 1}};
    CHECK(lp::maximize(unbounded).status == lp::Status::Unbounded);
}

TEST_CASE("linear program with a degenerate vertex terminates")
{
    // Redundant constraints meeting at the optimum.
    lp::Problem p{from_rows({{1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}}), {1, 1, 1}, {1, 1, 0, 0, 0}};
    auto s = lp::maximize(p);
    CHECK(s.status == lp::Status::Optimal);
    CHECK(s.value == 1);
    REQUIRE(s.x.size() == 5);
    CHECK(s.x[0] + s.x[1] == 1);
}
