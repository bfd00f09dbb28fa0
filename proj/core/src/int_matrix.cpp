#include "revtorus/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <tuple>

namespace revtorus {

std::string IntMatrix2::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

bool lex_less(const IntMatrix2& lhs, const IntMatrix2& rhs) {
    return std::tie(lhs.a, lhs.b, lhs.c, lhs.d) < std::tie(rhs.a, rhs.b, rhs.c, rhs.d);
}

Int det(const IntMatrix2& m) { return m.a * m.d - m.b * m.c; }

Int trace(const IntMatrix2& m) { return m.a + m.d; }

bool is_unimodular(const IntMatrix2& m) {
    const Int d = det(m);
    return d == 1 || d == -1;
}

IntMatrix2 transpose(const IntMatrix2& m) { return {m.a, m.c, m.b, m.d}; }

IntMatrix2 inverse(const IntMatrix2& m) {
    const Int dt = det(m);
    if (dt == 1) return {m.d, -m.b, -m.c, m.a};
    if (dt == -1) return {-m.d, m.b, m.c, -m.a};
    throw NonUnimodular("inverse: determinant is " + dt.str() + ", need +1 or -1");
}

IntMatrix2 power(const IntMatrix2& m, long n) {
    IntMatrix2 base = n < 0 ? inverse(m) : m;
    unsigned long e = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    IntMatrix2 acc = IntMatrix2::identity();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool is_involution(const IntMatrix2& m) { return m * m == IntMatrix2::identity(); }

bool is_hyperbolic(const IntMatrix2& m) {
    const Int dt = det(m);
    const Int t = trace(m);
    if (dt == 1) return t * t - 4 > 0;
    if (dt == -1) return !is_perfect_square(t * t + 4);
    throw NonUnimodular("is_hyperbolic: determinant is " + dt.str() + ", need +1 or -1");
}

bool reverses(const IntMatrix2& a, const IntMatrix2& l) {
    if (!is_involution(a))
        throw PreconditionViolated("reverses: first argument is not an involution");
    if (!is_unimodular(l))
        throw PreconditionViolated("reverses: second argument is not unimodular");
    return a * l == inverse(l) * a;
}

Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    const Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

Rat det(const RationalMatrix2& m) { return m.a * m.d - m.b * m.c; }

RationalMatrix2 inverse(const RationalMatrix2& m) {
    const Rat dt = det(m);
    if (dt == 1) return {m.d, -m.b, -m.c, m.a};
    if (dt == -1) return {-m.d, m.b, m.c, -m.a};
    throw NonUnimodular("inverse: rational matrix determinant is not +1 or -1");
}

bool derivative_constraint_check(const RationalMatrix2& dr_at_fp,
                                 const RationalMatrix2& df_at_p,
                                 const RationalMatrix2& dr_at_p,
                                 const RationalMatrix2& df_at_rp) {
    for (const auto* m : {&dr_at_fp, &df_at_p, &dr_at_p, &df_at_rp}) {
        const Rat dt = det(*m);
        if (dt != 1 && dt != -1)
            throw NonUnimodular("derivative_constraint_check: matrix determinant is not +1 or -1");
    }
    return dr_at_fp * df_at_p == inverse(df_at_rp) * dr_at_p;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
    return os << "(" << m.a << "," << m.b << ";" << m.c << "," << m.d << ")";
}

}  // namespace revtorus
