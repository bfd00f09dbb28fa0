#include "revtorus/pell.hpp"

#include <algorithm>
#include <tuple>

namespace revtorus {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

void verify_solution(const PellProblem& p, const PellSolution& s) {
    if (s.x * s.x - p.D * s.y * s.y != p.N)
        throw Error("solve_pell: emitted (" + s.x.str() + "," + s.y.str() +
                    ") violates x^2 - " + p.D.str() + "*y^2 = " + p.N.str());
}

void push_sign_combinations(std::vector<PellSolution>& out, const Int& x, const Int& y) {
    out.push_back({x, y});
    if (x != 0) out.push_back({-x, y});
    if (y != 0) out.push_back({x, -y});
    if (x != 0 && y != 0) out.push_back({-x, -y});
}

void sort_dedup(std::vector<PellSolution>& v) {
    std::sort(v.begin(), v.end(), [](const PellSolution& l, const PellSolution& r) {
        return lex_less(l, r);
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// x^2 + D y^2, strictly unimodal along a unit-action orbit when N != 0,
// so walking downhill from any solution reaches the orbit minimum.
Int orbit_height(const Int& D, const PellSolution& s) {
    return s.x * s.x + D * s.y * s.y;
}

PellSolution canonical_representative(const UnitPair& unit, const Int& D, PellSolution s) {
    for (;;) {
        const PellSolution fwd = apply_unit(unit, D, s);
        const PellSolution bwd = apply_unit(unit, D, s, true);
        const Int hs = orbit_height(D, s);
        const Int hf = orbit_height(D, fwd);
        const Int hb = orbit_height(D, bwd);
        if (hf < hs) {
            s = fwd;
        } else if (hb < hs) {
            s = bwd;
        } else if (hf == hs && lex_less(fwd, s)) {
            s = fwd;
        } else if (hb == hs && lex_less(bwd, s)) {
            s = bwd;
        } else {
            return s;
        }
    }
}

std::vector<Int> positive_divisors(const Int& n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

void materialize_lines(PellSolutionSet& out, long limit) {
    for (const SolutionLine& line : out.lines)
        for (Int y = -limit; y <= limit; ++y)
            out.solutions.push_back({line.x_const + line.x_per_y * y, y});
    sort_dedup(out.solutions);
}

}  // namespace

bool lex_less(const PellSolution& lhs, const PellSolution& rhs) {
    return std::tie(lhs.x, lhs.y) < std::tie(rhs.x, rhs.y);
}

ContinuedFractionExpansion cf_sqrt(const Int& D) {
    if (D <= 0 || is_perfect_square(D))
        throw SquareOrNonpositive("cf_sqrt: need a positive nonsquare, got " + D.str());
    const Int a0 = isqrt(D);
    ContinuedFractionExpansion cf;
    cf.a0 = a0;
    // PQa recurrence for sqrt(D); the period closes at the first Q = 1.
    Int P = 0, Q = 1, a = a0;
    do {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (a0 + P) / Q;
        cf.period.push_back(a);
    } while (Q != 1);
    return cf;
}

UnitPair fundamental_unit(const Int& D) {
    const ContinuedFractionExpansion cf = cf_sqrt(D);
    const std::size_t ell = cf.period.size();
    Int h_prev = 1, k_prev = 0;
    Int h = cf.a0, k = 1;
    for (std::size_t i = 0; i + 1 < ell; ++i) {
        const Int h_next = cf.period[i] * h + h_prev;
        const Int k_next = cf.period[i] * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    if (ell % 2 == 0) return {h, k};
    // Odd period: (h,k) has norm -1; its square is the fundamental +1 unit.
    return {h * h + D * k * k, 2 * h * k};
}

PellSolution apply_unit(const UnitPair& unit, const Int& D, const PellSolution& s, bool invert) {
    if (invert) return {unit.t * s.x - D * unit.u * s.y, -unit.u * s.x + unit.t * s.y};
    return {unit.t * s.x + D * unit.u * s.y, unit.u * s.x + unit.t * s.y};
}

PellSolutionSet solve_pell(const PellProblem& p, long limit) {
    if (limit < 1) throw LimitZero("solve_pell: materialization limit must be >= 1");
    PellSolutionSet out;
    out.problem = p;
    const Int& D = p.D;
    const Int& N = p.N;

    if (D < 0) {
        // Ellipse x^2 + |D| y^2 = N: complete enumeration over |y| <= sqrt(N/-D).
        if (N >= 0) {
            for (Int y = 0; -D * y * y <= N; ++y) {
                const Int x2 = N + D * y * y;
                const Int x = isqrt(x2);
                if (x * x == x2) push_sign_combinations(out.solutions, x, y);
            }
            sort_dedup(out.solutions);
        }
        out.kind = out.solutions.empty() ? PellKind::Empty : PellKind::Finite;
        out.complete = true;
    } else if (D == 0) {
        // x^2 = N: two vertical lines when N is a positive square, one when N = 0.
        if (N == 0) {
            out.lines.push_back({0, 0});
        } else if (N > 0 && is_perfect_square(N)) {
            const Int r = isqrt(N);
            out.lines.push_back({-r, 0});
            out.lines.push_back({r, 0});
        }
        if (out.lines.empty()) {
            out.kind = PellKind::Empty;
            out.complete = true;
        } else {
            out.kind = PellKind::DegenerateLines;
            materialize_lines(out, limit);
        }
    } else if (is_perfect_square(D)) {
        const Int s = isqrt(D);
        if (N == 0) {
            out.lines.push_back({0, s});
            out.lines.push_back({0, -s});
            out.kind = PellKind::DegenerateLines;
            materialize_lines(out, limit);
        } else {
            // (x - s y)(x + s y) = N: enumerate signed divisor factorizations.
            for (const Int& m : positive_divisors(abs_int(N))) {
                for (int sign : {+1, -1}) {
                    const Int e = sign * m;
                    const Int f = N / e;
                    if ((e + f) % 2 != 0) continue;
                    if ((f - e) % (2 * s) != 0) continue;
                    out.solutions.push_back({(e + f) / 2, (f - e) / (2 * s)});
                }
            }
            sort_dedup(out.solutions);
            out.kind = out.solutions.empty() ? PellKind::Empty : PellKind::Finite;
            out.complete = true;
        }
    } else {
        // D > 0 nonsquare: hyperbola with unit-action orbit classes.
        if (N == 0) {
            // sqrt(D) irrational, so only the origin.
            out.solutions.push_back({0, 0});
            out.kind = PellKind::Finite;
            out.complete = true;
        } else {
            const UnitPair unit = fundamental_unit(D);
            out.unit = unit;
            // Every orbit has a member with 2 D y^2 <= (t+1)|N| (classical
            // fundamental-solution bound, both signs of N).
            const Int scan_cap = (unit.t + 1) * abs_int(N);
            std::vector<PellSolution> seeds;
            for (Int y = 0; 2 * D * y * y <= scan_cap; ++y) {
                const Int x2 = N + D * y * y;
                if (x2 < 0) continue;
                const Int x = isqrt(x2);
                if (x * x == x2) push_sign_combinations(seeds, x, y);
            }
            for (const PellSolution& s : seeds)
                out.class_representatives.push_back(canonical_representative(unit, D, s));
            sort_dedup(out.class_representatives);
            if (out.class_representatives.empty()) {
                out.kind = PellKind::Empty;
                out.complete = true;
            } else {
                out.kind = PellKind::InfiniteClasses;
                for (const PellSolution& rep : out.class_representatives) {
                    PellSolution fwd = rep, bwd = rep;
                    out.solutions.push_back(rep);
                    for (long k = 1; k < limit; ++k) {
                        if (k % 2 == 1) {
                            fwd = apply_unit(unit, D, fwd);
                            out.solutions.push_back(fwd);
                        } else {
                            bwd = apply_unit(unit, D, bwd, true);
                            out.solutions.push_back(bwd);
                        }
                    }
                }
                sort_dedup(out.solutions);
            }
        }
    }

    for (const PellSolution& s : out.solutions) verify_solution(p, s);
    for (const PellSolution& s : out.class_representatives) verify_solution(p, s);
    for (const SolutionLine& line : out.lines) {
        // (x_const + m y)^2 - D y^2 == N for all y.
        if (line.x_const * line.x_const != N || line.x_const * line.x_per_y != 0 ||
            line.x_per_y * line.x_per_y != D)
            throw Error("solve_pell: emitted line is not a solution family");
    }
    return out;
}

std::vector<PellSolution> brute_force_pell(const PellProblem& p, const Int& bound) {
    std::vector<PellSolution> out;
    for (Int y = 0; y <= bound; ++y) {
        const Int x2 = p.N + p.D * y * y;
        if (x2 < 0) continue;
        const Int x = isqrt(x2);
        if (x * x != x2 || x > bound) continue;
        push_sign_combinations(out, x, y);
    }
    sort_dedup(out);
    return out;
}

std::vector<PellSolution> solutions_in_window(const PellSolutionSet& set, const Int& bound) {
    std::vector<PellSolution> out;
    const auto in_window = [&](const PellSolution& s) {
        return abs_int(s.x) <= bound && abs_int(s.y) <= bound;
    };
    switch (set.kind) {
        case PellKind::Empty:
            break;
        case PellKind::Finite:
            for (const PellSolution& s : set.solutions)
                if (in_window(s)) out.push_back(s);
            break;
        case PellKind::DegenerateLines:
            for (const SolutionLine& line : set.lines)
                for (Int y = -bound; y <= bound; ++y) {
                    const PellSolution s{line.x_const + line.x_per_y * y, y};
                    if (in_window(s)) out.push_back(s);
                }
            break;
        case PellKind::InfiniteClasses: {
            // The height is minimal at the representative and grows in both
            // directions, so each walk terminates once past the window cap.
            const Int& D = set.problem.D;
            const Int height_cap = (1 + D) * bound * bound;
            for (const PellSolution& rep : set.class_representatives) {
                for (bool invert : {false, true}) {
                    PellSolution s = invert ? apply_unit(*set.unit, D, rep, true) : rep;
                    while (orbit_height(D, s) <= height_cap) {
                        if (in_window(s)) out.push_back(s);
                        s = apply_unit(*set.unit, D, s, invert);
                    }
                }
            }
            break;
        }
    }
    sort_dedup(out);
    return out;
}

}  // namespace revtorus
