#include <doctest.h>

#include <random>

#include "revtorus/int_matrix.hpp"
#include "revtorus/involution.hpp"

using namespace revtorus;

namespace {

const IntMatrix2 kId = IntMatrix2::identity();

// Random unimodular matrix from a short word in elementary shears and flips,
// rejected if any entry leaves [-10^6, 10^6].
IntMatrix2 random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shear(-15, 15);
    std::uniform_int_distribution<int> kind(0, 3);
    for (;;) {
        IntMatrix2 m = kId;
        for (int step = 0; step < 5; ++step) {
            switch (kind(rng)) {
                case 0: m = m * IntMatrix2{1, shear(rng), 0, 1}; break;
                case 1: m = m * IntMatrix2{1, 0, shear(rng), 1}; break;
                case 2: m = m * IntMatrix2{0, 1, -1, 0}; break;
                default: m = m * IntMatrix2{1, 0, 0, -1}; break;
            }
        }
        const Int bound = 1000000;
        if (abs(m.a) <= bound && abs(m.b) <= bound && abs(m.c) <= bound && abs(m.d) <= bound)
            return m;
    }
}

}  // namespace

TEST_SUITE("int-matrix") {

TEST_CASE("determinant") {
    CHECK(det(IntMatrix2{2, 1, 3, 2}) == 1);
    CHECK(det(kId) == 1);
    CHECK(det(IntMatrix2{2, 3, 1, 1}) == -1);
}

TEST_CASE("multiplication") {
    const IntMatrix2 m{2, 1, -3, -2};
    CHECK(kId * m == m);
    CHECK(m * kId == m);
    CHECK(m * m == kId);
    CHECK(IntMatrix2{2, 1, 1, 1} * IntMatrix2{1, -1, -1, 2} == kId);
}

TEST_CASE("inverse") {
    CHECK(inverse(kId) == kId);
    CHECK(inverse(IntMatrix2{2, 1, 1, 1}) == IntMatrix2{1, -1, -1, 2});
    const IntMatrix2 swap{0, 1, 1, 0};
    CHECK(inverse(swap) == swap);
    CHECK_THROWS_AS(inverse(IntMatrix2{2, 0, 0, 2}), NonUnimodular);
}

TEST_CASE("inverse roundtrip on random unimodular matrices") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 500; ++i) {
        const IntMatrix2 m = random_unimodular(rng);
        const Int dt = det(m);
        CHECK((dt == 1 || dt == -1));
        CHECK(m * inverse(m) == kId);
        CHECK(inverse(m) * m == kId);
    }
}

TEST_CASE("power") {
    const IntMatrix2 l{2, 1, 1, 1};
    CHECK(power(l, 0) == kId);
    CHECK(power(l, 1) == l);
    CHECK(power(l, 3) == l * l * l);
    CHECK(power(l, -2) * power(l, 2) == kId);
}

TEST_CASE("is_involution") {
    CHECK(is_involution(IntMatrix2{1, 0, 5, -1}));
    CHECK(is_involution(IntMatrix2{2, 1, -3, -2}));
    CHECK_FALSE(is_involution(IntMatrix2{2, 1, 1, 1}));
}

TEST_CASE("involutions are orientation-reversing unless trivial") {
    for (const IntMatrix2& a : enumerate_involutions(12)) {
        if (a == kId || a == -kId)
            CHECK(det(a) == 1);
        else
            CHECK(det(a) == -1);
    }
}

TEST_CASE("is_hyperbolic") {
    CHECK(is_hyperbolic(IntMatrix2{2, 1, 3, 2}));
    CHECK_FALSE(is_hyperbolic(kId));
    // det = -1, trace^2 + 4 = 13 is not a square
    CHECK(is_hyperbolic(IntMatrix2{2, 3, 1, 1}));
    // det = -1, trace 0: eigenvalues +-1
    CHECK_FALSE(is_hyperbolic(IntMatrix2{7, 4, -12, -7}));
    CHECK_THROWS_AS(is_hyperbolic(IntMatrix2{2, 0, 0, 2}), NonUnimodular);
}

TEST_CASE("reverses") {
    CHECK(reverses(IntMatrix2{2, 1, -3, -2}, IntMatrix2{2, 1, 3, 2}));
    CHECK(reverses(IntMatrix2{5, 3, -8, -5}, IntMatrix2{2, 1, 1, 1}));
    CHECK_FALSE(reverses(kId, IntMatrix2{2, 1, 1, 1}));
    CHECK_THROWS_AS(reverses(IntMatrix2{2, 1, 1, 1}, IntMatrix2{2, 1, 3, 2}),
                    PreconditionViolated);
    CHECK_THROWS_AS(reverses(IntMatrix2{1, 0, 5, -1}, IntMatrix2{2, 0, 0, 2}),
                    PreconditionViolated);
}

TEST_CASE("reversing a map reverses its inverse, and the conjugation identity") {
    const std::pair<IntMatrix2, IntMatrix2> pairs[] = {
        {{2, 1, -3, -2}, {2, 1, 3, 2}},
        {{5, 3, -8, -5}, {2, 1, 1, 1}},
        {{1, 0, 0, -1}, {3, 4, 2, 3}},
    };
    for (const auto& [a, l] : pairs) {
        REQUIRE(reverses(a, l));
        CHECK(reverses(a, inverse(l)));
        CHECK(a * l * a == inverse(l));
    }
}

TEST_CASE("integer square root") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    CHECK(is_perfect_square(Int(0)));
    CHECK(is_perfect_square(Int(1)));
    CHECK_FALSE(is_perfect_square(Int(2)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
    const Int big = Int("123456789123456789");
    CHECK(is_perfect_square(big * big));
    CHECK_FALSE(is_perfect_square(big * big + 1));
}

TEST_CASE("derivative constraint: reversor equals map") {
    const RationalMatrix2 a{1, 0, 0, -1};
    CHECK(derivative_constraint_check(a, a, a, a));
}

TEST_CASE("derivative constraint rejects the skewed area-preserving derivative") {
    const Rat eta(1, 10);
    const RationalMatrix2 dr{1, 0, 0, -1};
    const RationalMatrix2 df_p{1 + eta, 0, eta, Rat(-1) / (1 + eta)};
    const RationalMatrix2 df_rp{1 + eta, 0, 0, Rat(-1) / (1 + eta)};
    CHECK_FALSE(derivative_constraint_check(dr, df_p, dr, df_rp));
    // eta = 0 collapses both derivatives back to the reversor itself
    CHECK(derivative_constraint_check(dr, {1, 0, 0, -1}, dr, {1, 0, 0, -1}));
}

TEST_CASE("derivative constraint at a constant derivative equals reverses") {
    const RationalMatrix2 a{2, 1, -3, -2};
    const RationalMatrix2 l{2, 1, 3, 2};
    CHECK(derivative_constraint_check(a, l, a, l));
    CHECK(reverses(IntMatrix2{2, 1, -3, -2}, IntMatrix2{2, 1, 3, 2}));
}

TEST_CASE("derivative constraint requires unimodular inputs") {
    const RationalMatrix2 bad{2, 0, 0, 1};
    const RationalMatrix2 a{1, 0, 0, -1};
    CHECK_THROWS_AS(derivative_constraint_check(a, bad, a, a), NonUnimodular);
}

}  // TEST_SUITE
