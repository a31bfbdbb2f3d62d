#pragma once

#include "simplicia/exact_linalg.hpp"

#include <vector>

namespace simplicia::lp {

enum class Status { Optimal, Infeasible, Unbounded };

/// maximize objective . x  subject to  equalities * x = rhs,  x >= 0.
struct Problem
{
    RationalMatrix equalities;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;
};

struct Solution
{
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

/// Two-phase dense simplex method over exact rationals with Bland's rule,
/// so it always terminates.
Solution maximize(const Problem& problem);

}  // namespace simplicia::lp
