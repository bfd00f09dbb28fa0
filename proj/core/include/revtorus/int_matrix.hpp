#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "revtorus/errors.hpp"

namespace revtorus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact 2x2 integer matrix [[a,b],[c,d]], arbitrary precision.
///
/// Raw matrices are unconstrained; operations that only make sense for
/// unimodular matrices (|det| = 1) check and throw NonUnimodular.
struct IntMatrix2 {
    Int a, b, c, d;

    IntMatrix2() : a(0), b(0), c(0), d(0) {}
    IntMatrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    bool operator==(const IntMatrix2&) const = default;

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }

    std::string str() const;
};

/// Lexicographic order on (a,b,c,d); used for canonical enumeration order.
bool lex_less(const IntMatrix2& lhs, const IntMatrix2& rhs);

Int det(const IntMatrix2& m);

Int trace(const IntMatrix2& m);

bool is_unimodular(const IntMatrix2& m);

IntMatrix2 transpose(const IntMatrix2& m);

/// Exact inverse via the adjugate; requires |det| = 1.
IntMatrix2 inverse(const IntMatrix2& m);

/// Integer power; negative exponents go through the exact inverse.
IntMatrix2 power(const IntMatrix2& m, long n);

/// True iff m * m equals the identity entrywise.
bool is_involution(const IntMatrix2& m);

/// Hyperbolicity of a unimodular matrix: no eigenvalue on the unit circle.
/// det = +1: (a+d)^2 - 4 > 0.  det = -1: (a+d)^2 + 4 not a perfect square.
bool is_hyperbolic(const IntMatrix2& m);

/// True iff the involution `a` conjugates `l` to its inverse: a*l == inverse(l)*a.
/// Throws PreconditionViolated unless `a` is an involution and |det(l)| = 1.
bool reverses(const IntMatrix2& a, const IntMatrix2& l);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// 2x2 matrix with exact rational entries; carrier for pointwise derivatives.
struct RationalMatrix2 {
    Rat a, b, c, d;

    RationalMatrix2() : a(0), b(0), c(0), d(0) {}
    RationalMatrix2(Rat a_, Rat b_, Rat c_, Rat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    RationalMatrix2(const IntMatrix2& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}

    bool operator==(const RationalMatrix2&) const = default;

    RationalMatrix2 operator*(const RationalMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

Rat det(const RationalMatrix2& m);

/// Exact inverse; requires |det| = 1.
RationalMatrix2 inverse(const RationalMatrix2& m);

/// Linearized reversibility constraint between the derivatives of a reversor
/// r and a map f along an orbit step p -> f(p):
///
///   Dr(f(p)) * Df(p) == Df(r(p))^{-1} * Dr(p)
///
/// All four matrices must have |det| = 1 (throws NonUnimodular otherwise);
/// the comparison is exact in rational arithmetic.
bool derivative_constraint_check(const RationalMatrix2& dr_at_fp,
                                 const RationalMatrix2& df_at_p,
                                 const RationalMatrix2& dr_at_p,
                                 const RationalMatrix2& df_at_rp);

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

}  // namespace revtorus
