#include "simplicia/exact_lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace simplicia::lp {

namespace {

class Tableau
{
public:
    Tableau(std::size_t rows, std::size_t vars) : rows_(rows), vars_(vars), cells_(rows + 1, vars + 1), basis_(rows) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_(r, c); }
    Rational& objective(std::size_t c) { return cells_(rows_, c); }
    Rational& rhs(std::size_t r) { return cells_(r, vars_); }
    Rational& value() { return cells_(rows_, vars_); }
    std::size_t rows() const { return rows_; }
    std::size_t vars() const { return vars_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t row, std::size_t col)
    {
        Rational p = cells_(row, col);
        for (std::size_t c = 0; c <= vars_; ++c)
            cells_(row, c) /= p;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == row || sgn(cells_(r, col)) == 0)
                continue;
            Rational factor = cells_(r, col);
            for (std::size_t c = 0; c <= vars_; ++c)
                cells_(r, c) -= factor * cells_(row, c);
        }
        basis_[row] = col;
    }

    // Runs primal simplex on the current objective row; columns >= `enter_limit`
    // may not enter. Returns false when unbounded.
    bool optimize(std::size_t enter_limit)
    {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t c = 0; c < enter_limit; ++c) {
                if (sgn(objective(c)) < 0) {
                    entering = c;
                    break;
                }
            }
            if (!entering)
                return true;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (sgn(at(r, *entering)) <= 0)
                    continue;
                Rational ratio = rhs(r) / at(r, *entering);
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (!leaving)
                return false;
            pivot(*leaving, *entering);
        }
    }

private:
    std::size_t rows_;
    std::size_t vars_;
    RationalMatrix cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Solution maximize(const Problem& problem)
{
    const std::size_t m = problem.equalities.rows();
    const std::size_t n = problem.equalities.cols();
    if (problem.rhs.size() != m || problem.objective.size() != n)
        throw std::invalid_argument("lp::maximize: inconsistent problem dimensions");

    Tableau t(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = sgn(problem.rhs[r]) < 0;
        for (std::size_t c = 0; c < n; ++c)
            t.at(r, c) = flip ? Rational(-problem.equalities(r, c)) : problem.equalities(r, c);
        t.at(r, n + r) = 1;
        t.rhs(r) = flip ? Rational(-problem.rhs[r]) : problem.rhs[r];
        t.basis()[r] = n + r;
    }

    // Phase 1: maximize -(sum of artificials).
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c <= n + m; ++c) {
            if (c >= n && c < n + m)
                continue;
            Rational& obj = c == n + m ? t.value() : t.objective(c);
            obj -= c == n + m ? t.rhs(r) : t.at(r, c);
        }
    }
    t.optimize(n + m);
    Solution solution;
    if (sgn(t.value()) < 0) {
        solution.status = Status::Infeasible;
        return solution;
    }

    // Drive remaining zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis()[r] < n)
            continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(t.at(r, c)) != 0) {
                t.pivot(r, c);
                break;
            }
        }
    }

    // Phase 2.
    for (std::size_t c = 0; c < n + m; ++c)
        t.objective(c) = c < n ? Rational(-problem.objective[c]) : Rational(0);
    t.value() = 0;
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t b = t.basis()[r];
        if (sgn(t.objective(b)) == 0)
            continue;
        Rational factor = t.objective(b);
        for (std::size_t c = 0; c < n + m; ++c)
            t.objective(c) -= factor * t.at(r, c);
        t.value() -= factor * t.rhs(r);
    }
    if (!t.optimize(n)) {
        solution.status = Status::Unbounded;
        return solution;
    }

    solution.status = Status::Optimal;
    solution.value = t.value();
    solution.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis()[r] < n)
            solution.x[t.basis()[r]] = t.rhs(r);
    }
    return solution;
}

}  // namespace simplicia::lp
