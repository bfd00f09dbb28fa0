#pragma once

#include <variant>
#include <vector>

#include "revtorus/int_matrix.hpp"

namespace revtorus {

// A nontrivial linear torus involution falls into one of three shapes:
//
//   lower triangular  (e,0; g,-e)   e in {+1,-1}, any integer g
//   upper triangular  (e,b; 0,-e)
//   generic           (A,B; (1-A^2)/B, -A)   B != 0, B | 1-A^2, (1-A^2)/B != 0
//
// plus the trivial cases +Id and -Id.  When a matrix fits two templates
// (e.g. diag(1,-1) is both triangular shapes with parameter 0) the
// classifier resolves lower, then upper, then generic, so that
// classify -> reconstruct round-trips.

struct TrivialPlus {
    bool operator==(const TrivialPlus&) const = default;
};
struct TrivialMinus {
    bool operator==(const TrivialMinus&) const = default;
};
struct LowerTriangular {
    int sign;  // +1 -> top-left entry +1
    Int gamma;
    bool operator==(const LowerTriangular&) const = default;
};
struct UpperTriangular {
    int sign;
    Int beta;
    bool operator==(const UpperTriangular&) const = default;
};
struct Generic {
    Int alpha;
    Int beta;
    bool operator==(const Generic&) const = default;
};

using InvolutionClass =
    std::variant<TrivialPlus, TrivialMinus, LowerTriangular, UpperTriangular, Generic>;

/// Classify an involution into its branch; throws NotInvolution otherwise.
InvolutionClass classify_involution(const IntMatrix2& a);

/// Rebuild the matrix from its class.  Inverse of classify_involution for
/// classes produced by it; throws Error if the parameters are inconsistent
/// (e.g. a Generic beta that does not divide 1 - alpha^2).
IntMatrix2 reconstruct(const InvolutionClass& cls);

/// All involutions with |entries| <= bound, duplicate-free, in lexicographic
/// (a,b,c,d) order.  Structured scan over the defining equations, not over
/// the classification, so it can serve as an oracle for it.
std::vector<IntMatrix2> enumerate_involutions(const Int& bound);

/// Primitive integer direction (p,q), gcd(p,q) = 1, first nonzero entry > 0.
/// The fixed set of the involution contains the torus projection of the
/// line t*(p,q) through the origin.
struct FixedLine {
    Int p, q;
    bool operator==(const FixedLine&) const = default;
};

/// Direction of the +1 eigenspace of a nontrivial involution.
/// Throws TrivialInvolution for +/-Id, NotInvolution otherwise.
FixedLine fixed_line(const IntMatrix2& a);

/// A hyperbolic, orientation-preserving partner: returns l with det(l) = 1,
/// is_hyperbolic(l) and reverses(a, l), built from per-branch recipes.
/// Throws TrivialInvolution for +/-Id (no hyperbolic matrix is reversed by
/// a trivial involution), NotInvolution otherwise.
IntMatrix2 construct_reversible_anosov(const IntMatrix2& a);

}  // namespace revtorus
