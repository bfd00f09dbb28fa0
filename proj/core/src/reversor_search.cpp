#include "revtorus/reversor_search.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "revtorus/involution.hpp"

namespace revtorus {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Candidate (alpha, beta) for the generic branch; keeps only genuine
// generic-class involutions that reverse l exactly.
std::optional<GenericReversor> make_generic(const IntMatrix2& l, const Int& alpha,
                                            const Int& beta, FoundBy found_by) {
    if (beta == 0) return std::nullopt;
    const Int num = 1 - alpha * alpha;
    if (num == 0) return std::nullopt;  // triangular boundary, listed elsewhere
    if (num % beta != 0) return std::nullopt;
    const IntMatrix2 a{alpha, beta, num / beta, -alpha};
    if (!is_involution(a) || !reverses(a, l)) return std::nullopt;
    GenericReversor out;
    out.alpha = alpha;
    out.beta = beta;
    out.matrix = a;
    out.found_by = found_by;
    const Int shear = det(l) == 1 ? Int(l.d - l.a) : Int(l.a + l.d);
    out.conic_point = {2 * l.b * alpha + shear * beta, beta};
    return out;
}

bool generic_key_less(const GenericReversor& lhs, const GenericReversor& rhs) {
    return std::tuple(abs_int(lhs.alpha), abs_int(lhs.beta), lhs.alpha < 0, lhs.beta < 0,
                      lhs.alpha, lhs.beta) < std::tuple(abs_int(rhs.alpha), abs_int(rhs.beta),
                                                        rhs.alpha < 0, rhs.beta < 0, rhs.alpha,
                                                        rhs.beta);
}

void append_triangular(std::vector<TriangularReversor>& out, TriangularBranch branch,
                       const IntMatrix2& l, const Int& divisor, const Int& numerator) {
    if (divisor == 0 || numerator % divisor != 0) return;
    const Int gamma = numerator / divisor;
    IntMatrix2 a;
    switch (branch) {
        case TriangularBranch::LowerPlus: a = {1, 0, gamma, -1}; break;
        case TriangularBranch::UpperPlus: a = {1, gamma, 0, -1}; break;
        case TriangularBranch::LowerMinus: a = {-1, 0, gamma, 1}; break;
        case TriangularBranch::UpperMinus: a = {-1, gamma, 0, 1}; break;
    }
    if (!reverses(a, l))
        throw Error("find_reversors: triangular closed form failed verification");
    out.push_back({branch, gamma, a});
}

}  // namespace

const char* to_string(TriangularBranch b) {
    switch (b) {
        case TriangularBranch::LowerPlus: return "lower_plus";
        case TriangularBranch::UpperPlus: return "upper_plus";
        case TriangularBranch::LowerMinus: return "lower_minus";
        case TriangularBranch::UpperMinus: return "upper_minus";
    }
    return "?";
}

const char* to_string(FoundBy f) {
    switch (f) {
        case FoundBy::PellClasses: return "pell_classes";
        case FoundBy::DirectScan: return "direct_scan";
        case FoundBy::Both: return "both";
    }
    return "?";
}

ObstructionRecord orientation_reversing_obstruction(const IntMatrix2& l) {
    const Int dt = det(l);
    if (dt == 1)
        throw WrongOrientation("orientation_reversing_obstruction: det(l) = +1");
    if (dt != -1) throw NonUnimodular("orientation_reversing_obstruction: |det(l)| != 1");
    if (!is_hyperbolic(l))
        throw NotHyperbolic("orientation_reversing_obstruction: matrix is not hyperbolic");
    ObstructionRecord rec;
    rec.map = l;
    rec.constraint_one = "alpha*(" + l.b.str() + ") + beta*(" + l.d.str() + ") = 0";
    rec.constraint_two =
        "alpha*beta*(" + l.c.str() + ") - (" + l.a.str() + ")*(1 - alpha^2) = 0";
    rec.derived = "beta*(" + l.a.str() + ") = alpha*(" + l.b.str() + ")";
    rec.trace = trace(l);
    rec.conclusion = "beta*(" + rec.trace.str() + ") = 0";
    // Hyperbolic det = -1 means trace != 0 ((a+d)^2 + 4 would be a perfect
    // square otherwise), so beta = 0 and the generic branch is empty.
    rec.empty_verdict = rec.trace != 0;
    return rec;
}

std::optional<IntMatrix2> pell_to_involution(const IntMatrix2& l, const PellSolution& s) {
    if (det(l) != 1)
        throw PreconditionViolated("pell_to_involution: det(l) must be +1");
    const Int beta = s.y;
    if (beta == 0) return std::nullopt;
    const Int numerator = s.x - (l.d - l.a) * beta;
    if (numerator % (2 * l.b) != 0) return std::nullopt;
    const Int alpha = numerator / (2 * l.b);
    const Int num = 1 - alpha * alpha;
    if (num % beta != 0) return std::nullopt;
    const IntMatrix2 a{alpha, beta, num / beta, -alpha};
    if (!is_involution(a) || !reverses(a, l)) return std::nullopt;
    return a;
}

ReversorReport find_reversors(const IntMatrix2& l, const Int& alpha_beta_bound,
                              long pell_class_limit) {
    if (!is_unimodular(l)) throw NonUnimodular("find_reversors: |det| != 1");
    if (!is_hyperbolic(l)) throw NotHyperbolic("find_reversors: matrix is not hyperbolic");
    if (l.b == 0 || l.c == 0)
        throw PreconditionViolated("find_reversors: hyperbolic input must have b, c != 0");

    ReversorReport report;
    report.map = l;
    report.orientation_preserving = det(l) == 1;
    report.scan_bound = alpha_beta_bound;
    report.class_limit = pell_class_limit;

    const Int shear = report.orientation_preserving ? Int(l.d - l.a) : Int(l.a + l.d);
    report.conic_discriminant = report.orientation_preserving
                                    ? trace(l) * trace(l) - 4
                                    : (l.a - l.d) * (l.a - l.d) - 4;
    report.pell = {report.conic_discriminant, 4 * l.b * l.b};
    report.pell_set = solve_pell(report.pell, pell_class_limit);

    if (report.orientation_preserving) {
        append_triangular(report.triangular, TriangularBranch::LowerPlus, l, l.b, l.d - l.a);
        append_triangular(report.triangular, TriangularBranch::UpperPlus, l, l.c, l.d - l.a);
        append_triangular(report.triangular, TriangularBranch::LowerMinus, l, l.b, l.a - l.d);
        append_triangular(report.triangular, TriangularBranch::UpperMinus, l, l.c, l.a - l.d);
    }

    // Generic branch, route 1: map materialized Pell solutions back through
    // the change of variables x = 2b*alpha + shear*beta, y = beta.
    std::map<std::tuple<Int, Int>, GenericReversor> found;
    for (const PellSolution& s : report.pell_set.solutions) {
        if (s.y == 0) continue;
        const Int numerator = s.x - shear * s.y;
        if (numerator % (2 * l.b) != 0) continue;
        if (auto g = make_generic(l, numerator / (2 * l.b), s.y, FoundBy::PellClasses))
            found.emplace(std::tuple(g->alpha, g->beta), *g);
    }
    // Route 2: independent bounded scan over (alpha, beta).
    for (Int alpha = -alpha_beta_bound; alpha <= alpha_beta_bound; ++alpha) {
        for (Int beta = -alpha_beta_bound; beta <= alpha_beta_bound; ++beta) {
            if (auto g = make_generic(l, alpha, beta, FoundBy::DirectScan)) {
                auto [it, inserted] = found.emplace(std::tuple(g->alpha, g->beta), *g);
                if (!inserted) it->second.found_by = FoundBy::Both;
            }
        }
    }
    for (auto& [key, g] : found) report.generic.push_back(g);
    std::sort(report.generic.begin(), report.generic.end(), generic_key_less);
    report.generic_truncated = report.pell_set.kind == PellKind::InfiniteClasses;

    if (!report.orientation_preserving) {
        report.obstruction = orientation_reversing_obstruction(l);
        if (!report.generic.empty() || !report.triangular.empty())
            throw Error("find_reversors: orientation-reversing map produced a reversor, "
                        "contradicting the obstruction derivation");
    }
    return report;
}

std::vector<IntMatrix2> r_centralizer_orbit(const IntMatrix2& a, const IntMatrix2& l, long n_lo,
                                            long n_hi) {
    if (!is_involution(a) || !is_unimodular(l) || !reverses(a, l))
        throw NotReversor("r_centralizer_orbit: pair does not satisfy a*l = l^-1*a");
    std::vector<IntMatrix2> orbit;
    for (long n = n_lo; n <= n_hi; ++n) {
        IntMatrix2 m = a * power(l, n);
        if (!is_involution(m) || !reverses(m, l))
            throw Error("r_centralizer_orbit: a*l^n failed verification at n = " +
                        std::to_string(n));
        orbit.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
            if (orbit[i] == orbit[j])
                throw Error("r_centralizer_orbit: orbit elements collide; map cannot be "
                            "hyperbolic");
    return orbit;
}

}  // namespace revtorus
