#pragma once

#include <optional>
#include <vector>

#include "revtorus/int_matrix.hpp"

namespace revtorus {

/// The generalized Pell equation x^2 - D*y^2 = N over the integers.
struct PellProblem {
    Int D, N;
    bool operator==(const PellProblem&) const = default;
};

struct PellSolution {
    Int x, y;
    bool operator==(const PellSolution&) const = default;
};

bool lex_less(const PellSolution& lhs, const PellSolution& rhs);

/// Continued fraction of sqrt(D) for D > 0 nonsquare:
/// sqrt(D) = [a0; period repeated], with the minimal period.
/// The last period element is always 2*a0.
struct ContinuedFractionExpansion {
    Int a0;
    std::vector<Int> period;
};

/// Minimal positive solution of t^2 - D*u^2 = 1 (t > 0, u > 0).
struct UnitPair {
    Int t, u;
    bool operator==(const UnitPair&) const = default;
};

/// Throws SquareOrNonpositive unless D > 0 and nonsquare.
ContinuedFractionExpansion cf_sqrt(const Int& D);

/// Fundamental unit from the continued-fraction convergents: the convergent
/// at the end of the first period gives (t,u) directly when the period length
/// is even, and the norm -1 solution (h,k) with (t,u) = (h^2 + D k^2, 2hk)
/// when it is odd.
UnitPair fundamental_unit(const Int& D);

/// One application of the unit action: (x,y) -> (t x + D u y, u x + t y).
/// invert = true applies the inverse unit (t,-u).
PellSolution apply_unit(const UnitPair& unit, const Int& D, const PellSolution& s,
                        bool invert = false);

enum class PellKind { Empty, Finite, InfiniteClasses, DegenerateLines };

/// A line of solutions x = x_const + x_per_y * y, y free.  Vertical lines
/// (D = 0, N a square) have x_per_y = 0; the N = 0, D = square case gives
/// the two lines x = +-sqrt(D) * y.
struct SolutionLine {
    Int x_const;
    Int x_per_y;
    bool operator==(const SolutionLine&) const = default;
};

/// Solution set of a generalized Pell equation, organized by conic regime:
///   D < 0                ellipse, complete finite list
///   D = 0 or D = square  degenerate factorization: finite list or lines
///   D > 0 nonsquare      unit-action orbit classes, one canonical
///                        representative per class plus a materialized sample
struct PellSolutionSet {
    PellProblem problem;
    PellKind kind = PellKind::Empty;
    /// Finite: the complete list.  InfiniteClasses: up to `limit` solutions
    /// per class, walked from each representative in both unit directions.
    /// DegenerateLines: sample points with |y| <= limit.
    std::vector<PellSolution> solutions;
    std::optional<UnitPair> unit;
    std::vector<PellSolution> class_representatives;
    std::vector<SolutionLine> lines;
    /// True when `solutions` is the complete solution set.
    bool complete = false;
};

/// Solve x^2 - D y^2 = N in all regimes.  `limit` bounds materialization per
/// class (and per line); must be >= 1 (throws LimitZero).
/// Every emitted solution is verified against the equation.
PellSolutionSet solve_pell(const PellProblem& p, long limit);

/// Independent oracle: exhaustive scan over |y| <= bound, keeping solutions
/// with |x| <= bound too.  Sorted lexicographically.
std::vector<PellSolution> brute_force_pell(const PellProblem& p, const Int& bound);

/// Exact enumeration of all solutions with |x|,|y| <= bound from a solved
/// set, independent of the materialization limit.  Sorted lexicographically.
std::vector<PellSolution> solutions_in_window(const PellSolutionSet& set, const Int& bound);

}  // namespace revtorus
