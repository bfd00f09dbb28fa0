#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revtorus/int_matrix.hpp"
#include "revtorus/pell.hpp"

namespace revtorus {

enum class TriangularBranch { LowerPlus, UpperPlus, LowerMinus, UpperMinus };

const char* to_string(TriangularBranch b);

struct TriangularReversor {
    TriangularBranch branch;
    Int gamma;
    IntMatrix2 matrix;
};

enum class FoundBy { PellClasses, DirectScan, Both };

const char* to_string(FoundBy f);

struct GenericReversor {
    Int alpha, beta;
    IntMatrix2 matrix;
    FoundBy found_by;
    PellSolution conic_point;  // (x,y) = (2b*alpha + (d-a)*beta, beta)
};

/// Symbolic derivation showing why an orientation-reversing hyperbolic map
/// admits no linear reversor: the reversibility system forces
/// beta*(a+d) = 0, while hyperbolicity with det = -1 forces a+d != 0.
struct ObstructionRecord {
    IntMatrix2 map;
    std::string constraint_one;  // alpha*b + beta*d = 0
    std::string constraint_two;  // alpha*beta*c - a*(1 - alpha^2) = 0
    std::string derived;         // beta*a = alpha*b
    std::string conclusion;      // beta*(a+d) = 0
    Int trace;
    bool empty_verdict;
};

/// Everything known about the linear reversors of one hyperbolic matrix.
struct ReversorReport {
    IntMatrix2 map;
    bool orientation_preserving = true;
    Int conic_discriminant;  // (a+d)^2 - 4 when det = +1, (a-d)^2 - 4 when det = -1
    PellProblem pell;
    PellSolutionSet pell_set;
    std::vector<TriangularReversor> triangular;
    std::vector<GenericReversor> generic;
    /// The generic family is an infinite unit-action orbit; the listing is a
    /// window bounded by scan_bound / class_limit.
    bool generic_truncated = false;
    Int scan_bound;
    long class_limit = 0;
    std::optional<ObstructionRecord> obstruction;
};

/// Find every linear involution reversing the toral map of l.
///
/// det = +1: the four triangular branches are solved in closed form (gamma =
/// +-(d-a)/b or +-(d-a)/c when the divisibility holds, else exactly empty);
/// the generic branch is enumerated two independent ways that are merged with
/// per-solution provenance: through the Pell solution classes of the conic,
/// and by a direct scan over |alpha|,|beta| <= alpha_beta_bound.
///
/// det = -1: the closed-form obstruction record is attached and the same
/// Pell-plus-filter pipeline is run as a cross-check; it must come up empty.
///
/// Throws NonUnimodular / NotHyperbolic on bad input.
ReversorReport find_reversors(const IntMatrix2& l, const Int& alpha_beta_bound,
                              long pell_class_limit);

/// Derivation record for det(l) = -1; throws WrongOrientation when
/// det(l) = +1 and NotHyperbolic when trace(l) = 0.
ObstructionRecord orientation_reversing_obstruction(const IntMatrix2& l);

/// Invert the conic change of variables x = 2b*alpha + (d-a)*beta, y = beta
/// for det(l) = +1.  Returns the involution (alpha, beta; (1-alpha^2)/beta,
/// -alpha) when alpha is integral, beta != 0, beta | 1-alpha^2 and the result
/// reverses l exactly; nullopt otherwise.
std::optional<IntMatrix2> pell_to_involution(const IntMatrix2& l, const PellSolution& s);

/// The reversors a*l^n for n in [n_lo, n_hi], each re-verified to be an
/// involution reversing l, pairwise distinct.  Throws NotReversor unless
/// reverses(a, l).
std::vector<IntMatrix2> r_centralizer_orbit(const IntMatrix2& a, const IntMatrix2& l, long n_lo,
                                            long n_hi);

}  // namespace revtorus
