#include "revtorus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

namespace revtorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double to_double(const Int& v) { return v.convert_to<double>(); }

double frac(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;  // rounding at the seam
    return r;
}

Rat rational_floor(const Rat& r) {
    Int num = numerator(r);
    const Int den = denominator(r);
    if (num >= 0) return Rat(num / den);
    // round toward -infinity
    Int q = num / den;
    if (q * den != num) --q;
    return Rat(q);
}

}  // namespace

TorusPoint wrap(TorusPoint p) { return {frac(p.x), frac(p.y)}; }

double circle_distance(double a, double b) {
    const double d = std::fabs(frac(a) - frac(b));
    return std::min(d, 1.0 - d);
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
    return std::max(circle_distance(p.x, q.x), circle_distance(p.y, q.y));
}

double det(const Mat2d& m) { return m.a * m.d - m.b * m.c; }

Mat2d inverse(const Mat2d& m) {
    const double dt = det(m);
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

double operator_norm(const Mat2d& m) {
    // Largest singular value of a 2x2 matrix.
    const double q = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    const double dt = det(m);
    const double disc = std::max(q * q - 4.0 * dt * dt, 0.0);
    return std::sqrt((q + std::sqrt(disc)) / 2.0);
}

Mat2d to_mat2d(const IntMatrix2& m) {
    return {to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d)};
}

Direction normalize_direction(double x, double y) {
    const double n = std::hypot(x, y);
    if (n == 0.0) throw Error("normalize_direction: zero vector");
    x /= n;
    y /= n;
    if (x < 0.0 || (x == 0.0 && y < 0.0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

double direction_angle(const Direction& d) {
    double a = std::atan2(d.y, d.x);
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
}

double line_angle_between(const Direction& u, const Direction& v) {
    const double cross = std::fabs(u.x * v.y - u.y * v.x);
    const double dot = std::fabs(u.x * v.x + u.y * v.y);
    return std::atan2(cross, dot);
}

ToralAutomorphism::ToralAutomorphism(IntMatrix2 m) : matrix(std::move(m)) {
    if (!is_unimodular(matrix))
        throw NonUnimodular("ToralAutomorphism: |det| != 1");
}

LinearInvolution::LinearInvolution(IntMatrix2 m) : matrix(std::move(m)) {
    if (!is_involution(matrix))
        throw NotInvolution("LinearInvolution: matrix does not square to Id");
}

namespace {

TorusPoint apply_integer_matrix(const IntMatrix2& m, const TorusPoint& p) {
    const Mat2d md = to_mat2d(m);
    return wrap(TorusPoint{md.a * p.x + md.b * p.y, md.c * p.x + md.d * p.y});
}

double standard_kick(double sigma, double x) { return sigma / kTwoPi * std::sin(kTwoPi * x); }

}  // namespace

TorusPoint apply(const MapDescriptor& f, const TorusPoint& p) {
    if (const auto* ta = std::get_if<ToralAutomorphism>(&f.kind))
        return apply_integer_matrix(ta->matrix, p);
    const auto& sm = std::get<StandardMap>(f.kind);
    const double kick = standard_kick(sm.sigma, p.x);
    const double y = p.y - kick;
    return wrap(TorusPoint{p.x + y, y});
}

TorusPoint apply_inverse(const MapDescriptor& f, const TorusPoint& p) {
    if (const auto* ta = std::get_if<ToralAutomorphism>(&f.kind))
        return apply_integer_matrix(inverse(ta->matrix), p);
    // Invert the shear first, then the kick: x = X - Y, y = Y + k sin(2 pi x).
    const auto& sm = std::get<StandardMap>(f.kind);
    const double x = frac(p.x - p.y);
    return wrap(TorusPoint{x, p.y + standard_kick(sm.sigma, x)});
}

Mat2d jacobian(const MapDescriptor& f, const TorusPoint& p) {
    if (const auto* ta = std::get_if<ToralAutomorphism>(&f.kind)) return to_mat2d(ta->matrix);
    const auto& sm = std::get<StandardMap>(f.kind);
    const double dk = sm.sigma * std::cos(kTwoPi * p.x);
    return {1.0 - dk, 1.0, -dk, 1.0};
}

TorusPoint apply(const ReversorDescriptor& r, const TorusPoint& p) {
    if (const auto* li = std::get_if<LinearInvolution>(&r.kind))
        return apply_integer_matrix(li->matrix, p);
    const auto& sr = std::get<StandardReversor>(r.kind);
    return wrap(TorusPoint{-p.x, p.y - standard_kick(sr.sigma, p.x)});
}

Mat2d jacobian(const ReversorDescriptor& r, const TorusPoint& p) {
    if (const auto* li = std::get_if<LinearInvolution>(&r.kind)) return to_mat2d(li->matrix);
    const auto& sr = std::get<StandardReversor>(r.kind);
    return {-1.0, 0.0, -sr.sigma * std::cos(kTwoPi * p.x), 1.0};
}

std::string describe(const MapDescriptor& f) {
    if (const auto* ta = std::get_if<ToralAutomorphism>(&f.kind))
        return "toral:" + ta->matrix.str();
    std::ostringstream os;
    os << "standard:sigma=" << std::get<StandardMap>(f.kind).sigma;
    return os.str();
}

std::string describe(const ReversorDescriptor& r) {
    if (const auto* li = std::get_if<LinearInvolution>(&r.kind))
        return "linear:" + li->matrix.str();
    std::ostringstream os;
    os << "standard-reversor:sigma=" << std::get<StandardReversor>(r.kind).sigma;
    return os.str();
}

std::uint64_t SeededSampler::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SeededSampler::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

TorusPoint SeededSampler::torus_point() {
    const double x = uniform01();
    const double y = uniform01();
    return {x, y};
}

double SeededSampler::angle() { return kTwoPi * uniform01(); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SeededSampler s(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return s.next();
}

ReversibilityResidual check_reversibility(const MapDescriptor& f, const ReversorDescriptor& r,
                                          long samples, std::uint64_t seed) {
    if (samples < 1) throw PreconditionViolated("check_reversibility: samples must be >= 1");
    SeededSampler sampler(seed);
    ReversibilityResidual out;
    for (long i = 0; i < samples; ++i) {
        const TorusPoint p = sampler.torus_point();
        const TorusPoint lhs = apply(r, apply(f, p));
        const TorusPoint rhs = apply_inverse(f, apply(r, p));
        out.conjugacy = std::max(out.conjugacy, torus_distance(lhs, rhs));
        out.involution = std::max(out.involution, torus_distance(apply(r, apply(r, p)), p));
    }
    return out;
}

LyapunovEstimate lyapunov_plus(const MapDescriptor& f, const TorusPoint& p, long n,
                               long transient, std::uint64_t seed) {
    if (n < 1) throw PreconditionViolated("lyapunov_plus: n must be >= 1");
    if (transient < 0) throw PreconditionViolated("lyapunov_plus: transient must be >= 0");
    LyapunovEstimate est;
    est.n = n;
    est.transient = transient;
    est.seed = seed;
    est.initial_point = wrap(p);
    SeededSampler sampler(seed);
    est.initial_angle = sampler.angle();

    TorusPoint q = est.initial_point;
    Vec2d v{std::cos(est.initial_angle), std::sin(est.initial_angle)};
    for (long i = 0; i < transient; ++i) {
        v = jacobian(f, q) * v;
        const double s = std::hypot(v.x, v.y);
        v.x /= s;
        v.y /= s;
        q = apply(f, q);
    }
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        v = jacobian(f, q) * v;
        const double s = std::hypot(v.x, v.y);
        acc += std::log(s);
        v.x /= s;
        v.y /= s;
        q = apply(f, q);
    }
    est.lambda_plus = acc / static_cast<double>(n);
    return est;
}

double check_exponent_symmetry(const MapDescriptor& f, const ReversorDescriptor& r,
                               const TorusPoint& p, long n, long transient, std::uint64_t seed,
                               double reversibility_tol, long reversibility_samples) {
    const ReversibilityResidual res = check_reversibility(f, r, reversibility_samples, seed);
    if (res.conjugacy > reversibility_tol || res.involution > reversibility_tol)
        throw NotAReversiblePair("check_exponent_symmetry: residual " +
                                 std::to_string(std::max(res.conjugacy, res.involution)) +
                                 " above tolerance");
    const double at_p = lyapunov_plus(f, p, n, transient, seed).lambda_plus;
    const double at_rp = lyapunov_plus(f, apply(r, p), n, transient, seed).lambda_plus;
    return std::fabs(at_p - at_rp);
}

namespace {

// Direction at p of the expanding bundle of `forward` dynamics, computed by
// pushing a generic vector from the depth-n backward iterate of p along a
// stored pseudo-orbit.
Direction pushed_direction(const MapDescriptor& f, const TorusPoint& p, long depth,
                           bool unstable) {
    std::vector<TorusPoint> past(depth);
    TorusPoint q = p;
    for (long i = 0; i < depth; ++i) {
        q = unstable ? apply_inverse(f, q) : apply(f, q);
        past[i] = q;
    }
    // Fixed generic start direction; an exact eigendirection of an integer
    // matrix has algebraic slope, so this transcendental one never is one.
    Vec2d v{std::cos(1.0), std::sin(1.0)};
    for (long i = depth - 1; i >= 0; --i) {
        const Mat2d j = unstable ? jacobian(f, past[i]) : inverse(jacobian(f, past[i]));
        v = j * v;
        const double s = std::hypot(v.x, v.y);
        v.x /= s;
        v.y /= s;
    }
    return normalize_direction(v.x, v.y);
}

std::optional<Direction> converged_direction(const MapDescriptor& f, const TorusPoint& p,
                                             long max_iterations, double angular_tol,
                                             bool unstable, long* used = nullptr) {
    long depth = 16;
    Direction prev = pushed_direction(f, p, depth, unstable);
    while (2 * depth <= max_iterations) {
        depth *= 2;
        const Direction cur = pushed_direction(f, p, depth, unstable);
        if (line_angle_between(prev, cur) < angular_tol) {
            if (used) *used = depth;
            return cur;
        }
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace

std::optional<OseledetsSplitting> oseledets_directions(const MapDescriptor& f,
                                                       const TorusPoint& p, long max_iterations,
                                                       double angular_tol) {
    long used_u = 0, used_s = 0;
    const auto e_u = converged_direction(f, p, max_iterations, angular_tol, true, &used_u);
    if (!e_u) return std::nullopt;
    const auto e_s = converged_direction(f, p, max_iterations, angular_tol, false, &used_s);
    if (!e_s) return std::nullopt;
    return OseledetsSplitting{*e_u, *e_s, std::max(used_u, used_s)};
}

std::optional<SplittingSwapAngles> check_splitting_swap(const MapDescriptor& f,
                                                        const ReversorDescriptor& r,
                                                        const TorusPoint& p, long max_iterations,
                                                        double angular_tol) {
    const auto split_p = oseledets_directions(f, p, max_iterations, angular_tol);
    if (!split_p) return std::nullopt;
    const TorusPoint rp = apply(r, p);
    const auto split_rp = oseledets_directions(f, rp, max_iterations, angular_tol);
    if (!split_rp) return std::nullopt;
    const Mat2d dr = jacobian(r, p);
    const Vec2d du = dr * Vec2d{split_p->unstable.x, split_p->unstable.y};
    const Vec2d ds = dr * Vec2d{split_p->stable.x, split_p->stable.y};
    SplittingSwapAngles out;
    out.unstable_to_stable =
        line_angle_between(normalize_direction(du.x, du.y), split_rp->stable);
    out.stable_to_unstable =
        line_angle_between(normalize_direction(ds.x, ds.y), split_rp->unstable);
    return out;
}

double domination_ratio(const MapDescriptor& f, const TorusPoint& p, int m, const Direction& e_u,
                        const Direction& e_s) {
    if (m < 1) throw PreconditionViolated("domination_ratio: m must be >= 1");
    Vec2d vu{e_u.x, e_u.y};
    Vec2d vs{e_s.x, e_s.y};
    TorusPoint q = p;
    double log_growth_u = 0.0, log_growth_s = 0.0;
    for (int i = 0; i < m; ++i) {
        const Mat2d j = jacobian(f, q);
        vu = j * vu;
        vs = j * vs;
        const double nu = std::hypot(vu.x, vu.y);
        const double ns = std::hypot(vs.x, vs.y);
        log_growth_u += std::log(nu);
        log_growth_s += std::log(ns);
        vu.x /= nu;
        vu.y /= nu;
        vs.x /= ns;
        vs.y /= ns;
        q = apply(f, q);
    }
    return std::exp(log_growth_s - log_growth_u);
}

std::optional<SplittingEstimate> domination_check(const MapDescriptor& f, const TorusPoint& p,
                                                  int m, long orbit_length, long max_iterations,
                                                  double angular_tol) {
    if (m < 1 || orbit_length < 1)
        throw PreconditionViolated("domination_check: m and orbit_length must be >= 1");
    SplittingEstimate est;
    est.m = m;
    est.orbit_length = orbit_length;
    TorusPoint q = wrap(p);
    for (long i = 0; i < orbit_length; ++i) {
        const auto split = oseledets_directions(f, q, max_iterations, angular_tol);
        if (!split) return std::nullopt;
        if (i == 0) {
            est.e_u_angle = direction_angle(split->unstable);
            est.e_s_angle = direction_angle(split->stable);
        }
        est.ratio = std::max(est.ratio, domination_ratio(f, q, m, split->unstable, split->stable));
        q = apply(f, q);
    }
    est.dominated = est.ratio <= 0.5;
    return est;
}

RationalPoint wrap(RationalPoint p) {
    p.x -= rational_floor(p.x);
    p.y -= rational_floor(p.y);
    return p;
}

RationalPoint parse_rational_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw NonRationalInput("parse_rational_point: expected \"x,y\", got \"" + text + "\"");
    const auto parse_one = [](std::string s) -> Rat {
        s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
        try {
            return Rat(s);
        } catch (const std::exception&) {
            throw NonRationalInput("parse_rational_point: \"" + s + "\" is not a rational p/q");
        }
    };
    return wrap({parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))});
}

FreeOrbitVerdict rf_free_test(const IntMatrix2& l, const IntMatrix2& a, const RationalPoint& p,
                              long horizon) {
    if (!is_unimodular(l)) throw NonUnimodular("rf_free_test: |det(l)| != 1");
    if (!is_involution(a)) throw NotInvolution("rf_free_test: reversor does not square to Id");
    if (horizon < 0) throw PreconditionViolated("rf_free_test: horizon must be >= 0");

    const auto step = [](const IntMatrix2& m, const RationalPoint& q) {
        return wrap(RationalPoint{m.a * q.x + m.b * q.y, m.c * q.x + m.d * q.y});
    };
    const RationalPoint start = wrap(p);
    const RationalPoint target = step(a, start);

    // Common denominator q: the orbit lives on the (1/q)-lattice, so its
    // period is at most q^2.
    const Int den_x = denominator(start.x);
    const Int den_y = denominator(start.y);
    const Int den = den_x / boost::multiprecision::gcd(den_x, den_y) * den_y;
    const Int lattice = den * den;
    const Int cap = lattice < horizon ? lattice : Int(horizon);

    FreeOrbitVerdict verdict;
    RationalPoint q = start;
    for (Int i = 0; i <= cap; ++i) {
        if (q == target) {
            verdict.free = false;
            verdict.hit_index = i.convert_to<long>();
            verdict.exhaustive = true;
            return verdict;
        }
        q = step(l, q);
        if (q == start) {
            // full cycle traversed without meeting R(p)
            verdict.free = true;
            verdict.period = (i + 1).convert_to<long>();
            verdict.exhaustive = true;
            return verdict;
        }
    }
    // Horizon cut the cycle short: check backward iterates as well.
    const IntMatrix2 l_inv = inverse(l);
    q = start;
    for (long i = 1; i <= horizon; ++i) {
        q = step(l_inv, q);
        if (q == target) {
            verdict.free = false;
            verdict.hit_index = -i;
            verdict.exhaustive = false;
            return verdict;
        }
    }
    verdict.free = true;
    verdict.exhaustive = false;
    return verdict;
}

FixSet fix_set(const ReversorDescriptor& r) {
    if (const auto* li = std::get_if<LinearInvolution>(&r.kind))
        return LinearFixSet{fixed_line(li->matrix)};
    // -x = x mod 1 forces x in {0, 1/2}; sin(2 pi x) vanishes at both.
    return ReflectionCircles{{0.0, 0.5}};
}

namespace {

struct NormAccumulator {
    Mat2d m{1.0, 0.0, 0.0, 1.0};
    double log_scale = 0.0;

    void step(const Mat2d& j) {
        m = j * m;
        const double big =
            std::max({std::fabs(m.a), std::fabs(m.b), std::fabs(m.c), std::fabs(m.d)});
        if (big > 1e150) {
            m.a /= big;
            m.b /= big;
            m.c /= big;
            m.d /= big;
            log_scale += std::log(big);
        }
    }

    double log_norm() const { return log_scale + std::log(operator_norm(m)); }
};

}  // namespace

IntegratedExponentEstimate integrated_exponent_estimate(const MapDescriptor& f,
                                                        long grid_resolution,
                                                        std::vector<long> n_list, int jobs) {
    if (grid_resolution < 2)
        throw PreconditionViolated("integrated_exponent_estimate: grid_resolution must be >= 2");
    if (n_list.empty())
        throw PreconditionViolated("integrated_exponent_estimate: n_list must be non-empty");
    std::sort(n_list.begin(), n_list.end());
    n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
    if (n_list.front() < 1)
        throw PreconditionViolated("integrated_exponent_estimate: n must be >= 1");
    const long n_max = n_list.back();

    const auto row_sums = [&](long row_begin, long row_end) {
        std::vector<double> sums(n_list.size(), 0.0);
        for (long i = row_begin; i < row_end; ++i) {
            for (long j = 0; j < grid_resolution; ++j) {
                TorusPoint q{(i + 0.5) / grid_resolution, (j + 0.5) / grid_resolution};
                NormAccumulator acc;
                std::size_t next = 0;
                for (long step = 1; step <= n_max && next < n_list.size(); ++step) {
                    acc.step(jacobian(f, q));
                    q = apply(f, q);
                    if (step == n_list[next]) {
                        sums[next] += acc.log_norm() / static_cast<double>(step);
                        ++next;
                    }
                }
            }
        }
        return sums;
    };

    std::vector<double> totals(n_list.size(), 0.0);
    if (jobs <= 1) {
        totals = row_sums(0, grid_resolution);
    } else {
        std::vector<std::future<std::vector<double>>> parts;
        const long chunk = (grid_resolution + jobs - 1) / jobs;
        for (long begin = 0; begin < grid_resolution; begin += chunk) {
            const long end = std::min(begin + chunk, grid_resolution);
            parts.push_back(std::async(std::launch::async, row_sums, begin, end));
        }
        for (auto& part : parts) {
            const std::vector<double> sums = part.get();
            for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += sums[k];
        }
    }

    IntegratedExponentEstimate out;
    const double cells = static_cast<double>(grid_resolution) * grid_resolution;
    out.value = totals[0] / cells;
    out.monotone_nonincreasing = true;
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        const double avg = totals[k] / cells;
        out.per_n.emplace_back(n_list[k], avg);
        out.value = std::min(out.value, avg);
        if (k > 0 && avg > out.per_n[k - 1].second + 1e-12) out.monotone_nonincreasing = false;
    }
    return out;
}

std::vector<LyapunovGridCell> lyapunov_grid(const MapDescriptor& f, long resolution, long n,
                                            long transient, std::uint64_t seed, int jobs) {
    if (resolution < 1) throw PreconditionViolated("lyapunov_grid: resolution must be >= 1");
    std::vector<LyapunovGridCell> cells(static_cast<std::size_t>(resolution) * resolution);
    const auto fill = [&](long row_begin, long row_end) {
        for (long i = row_begin; i < row_end; ++i) {
            for (long j = 0; j < resolution; ++j) {
                const std::size_t idx = static_cast<std::size_t>(i) * resolution + j;
                const TorusPoint p{(i + 0.5) / resolution, (j + 0.5) / resolution};
                cells[idx].point = p;
                cells[idx].lambda_plus =
                    lyapunov_plus(f, p, n, transient, mix_seed(seed, idx)).lambda_plus;
            }
        }
    };
    if (jobs <= 1) {
        fill(0, resolution);
    } else {
        std::vector<std::future<void>> parts;
        const long chunk = (resolution + jobs - 1) / jobs;
        for (long begin = 0; begin < resolution; begin += chunk) {
            const long end = std::min(begin + chunk, resolution);
            parts.push_back(std::async(std::launch::async, fill, begin, end));
        }
        for (auto& part : parts) part.get();
    }
    return cells;
}

}  // namespace revtorus
