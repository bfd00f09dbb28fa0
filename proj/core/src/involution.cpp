#include "revtorus/involution.hpp"

#include <algorithm>

namespace revtorus {

namespace {

Int gcd(Int x, Int y) {
    x = abs(x);
    y = abs(y);
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

FixedLine primitive(Int p, Int q) {
    const Int g = gcd(p, q);
    if (g == 0) throw Error("primitive: zero direction");
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

}  // namespace

InvolutionClass classify_involution(const IntMatrix2& a) {
    if (!is_involution(a)) throw NotInvolution("classify_involution: matrix does not square to Id");
    if (a == IntMatrix2::identity()) return TrivialPlus{};
    if (a == -IntMatrix2::identity()) return TrivialMinus{};
    if (a.b == 0) return LowerTriangular{a.a == 1 ? +1 : -1, a.c};
    if (a.c == 0) return UpperTriangular{a.a == 1 ? +1 : -1, a.b};
    return Generic{a.a, a.b};
}

IntMatrix2 reconstruct(const InvolutionClass& cls) {
    return std::visit(
        [](const auto& v) -> IntMatrix2 {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TrivialPlus>) {
                return IntMatrix2::identity();
            } else if constexpr (std::is_same_v<T, TrivialMinus>) {
                return -IntMatrix2::identity();
            } else if constexpr (std::is_same_v<T, LowerTriangular>) {
                return {v.sign, 0, v.gamma, -v.sign};
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                return {v.sign, v.beta, 0, -v.sign};
            } else {
                if (v.beta == 0) throw Error("reconstruct: Generic beta must be nonzero");
                const Int num = 1 - v.alpha * v.alpha;
                if (num % v.beta != 0)
                    throw Error("reconstruct: Generic beta does not divide 1 - alpha^2");
                return {v.alpha, v.beta, num / v.beta, -v.alpha};
            }
        },
        cls);
}

std::vector<IntMatrix2> enumerate_involutions(const Int& bound) {
    if (bound < 1) throw PreconditionViolated("enumerate_involutions: bound must be >= 1");
    std::vector<IntMatrix2> out;
    out.push_back(IntMatrix2::identity());
    out.push_back(-IntMatrix2::identity());
    // b = 0: a = +-1, d = -a, c free.
    for (Int c = -bound; c <= bound; ++c) {
        out.push_back({1, 0, c, -1});
        out.push_back({-1, 0, c, 1});
    }
    // b != 0: d = -a, c = (1-a^2)/b when integral (covers upper triangular via a = +-1).
    for (Int b = -bound; b <= bound; ++b) {
        if (b == 0) continue;
        for (Int a = -bound; a <= bound; ++a) {
            const Int num = 1 - a * a;
            if (num % b != 0) continue;
            const Int c = num / b;
            if (c < -bound || c > bound) continue;
            out.push_back({a, b, c, -a});
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FixedLine fixed_line(const IntMatrix2& a) {
    const InvolutionClass cls = classify_involution(a);
    return std::visit(
        [](const auto& v) -> FixedLine {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TrivialPlus> || std::is_same_v<T, TrivialMinus>) {
                throw TrivialInvolution("fixed_line: +/-Id has no one-dimensional fixed line");
            } else if constexpr (std::is_same_v<T, LowerTriangular>) {
                // (1,0;g,-1): y = (g/2) x.   (-1,0;g,1): x = 0.
                if (v.sign == 1) return primitive(2, v.gamma);
                return primitive(0, 1);
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                // (1,b;0,-1): y = 0.   (-1,b;0,1): x = (b/2) y.
                if (v.sign == 1) return primitive(1, 0);
                return primitive(v.beta, 2);
            } else {
                // (A,B;(1-A^2)/B,-A): y = ((1-A)/B) x.
                return primitive(v.beta, 1 - v.alpha);
            }
        },
        cls);
}

IntMatrix2 construct_reversible_anosov(const IntMatrix2& a) {
    const InvolutionClass cls = classify_involution(a);
    const IntMatrix2 l = std::visit(
        [](const auto& v) -> IntMatrix2 {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TrivialPlus> || std::is_same_v<T, TrivialMinus>) {
                throw TrivialInvolution(
                    "construct_reversible_anosov: no hyperbolic matrix is +/-Id-reversible");
            } else if constexpr (std::is_same_v<T, LowerTriangular>) {
                const Int& g = v.gamma;
                if (g == 0) return {3, 4, 2, 3};
                if (v.sign == 1) return {g, 1, 2 * g * g - 1, 2 * g};
                return {g, -1, 1 - 2 * g * g, 2 * g};
            } else if constexpr (std::is_same_v<T, UpperTriangular>) {
                // Transposed lower-triangular recipe: A L = L^{-1} A holds for
                // det(L) = 1 iff it holds for the transposes.
                const Int& b = v.beta;
                if (b == 0) return {3, 4, 2, 3};
                if (v.sign == 1) return {b, 2 * b * b - 1, 1, 2 * b};
                return {b, 1 - 2 * b * b, -1, 2 * b};
            } else {
                if (v.alpha == 0) {
                    // The swap-like involutions (0,B;1/B,0), B = +-1.  The
                    // a = d ansatz degenerates here (it forces a^2 + b^2 = 1);
                    // any (a,b;-b,d) with ad + b^2 = 1 and |a+d| > 2 works.
                    return {3, 1, -1, 0};
                }
                const Int num = v.alpha * v.alpha - 1;
                return {v.alpha, v.beta, num / v.beta, v.alpha};
            }
        },
        cls);
    if (det(l) != 1 || !is_hyperbolic(l) || !reverses(a, l))
        throw Error("construct_reversible_anosov: recipe produced an invalid partner for " +
                    a.str());
    return l;
}

}  // namespace revtorus
