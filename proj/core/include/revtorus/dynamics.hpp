#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "revtorus/int_matrix.hpp"
#include "revtorus/involution.hpp"

namespace revtorus {

/// Point on T^2 = R^2/Z^2, coordinates kept in [0,1).
struct TorusPoint {
    double x = 0.0, y = 0.0;
};

TorusPoint wrap(TorusPoint p);

/// min(|a-b| mod 1, 1 - |a-b| mod 1)
double circle_distance(double a, double b);

/// max of the coordinatewise circle distances.
double torus_distance(const TorusPoint& p, const TorusPoint& q);

struct Vec2d {
    double x = 0.0, y = 0.0;
};

struct Mat2d {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    Vec2d operator*(const Vec2d& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2d operator*(const Mat2d& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

double det(const Mat2d& m);
Mat2d inverse(const Mat2d& m);
/// Spectral (operator 2-)norm via the closed-form singular value.
double operator_norm(const Mat2d& m);
Mat2d to_mat2d(const IntMatrix2& m);

/// Unit direction with canonical sign: first nonzero component positive.
/// Represents a line through the origin (a point of projective space).
struct Direction {
    double x = 0.0, y = 0.0;
};

Direction normalize_direction(double x, double y);
/// Angle of the line in [0, pi).
double direction_angle(const Direction& d);
/// Angle between two lines, in [0, pi/2].
double line_angle_between(const Direction& u, const Direction& v);

// -- map and reversor descriptors ------------------------------------------

/// Toral automorphism induced by a unimodular integer matrix.
struct ToralAutomorphism {
    IntMatrix2 matrix;
    explicit ToralAutomorphism(IntMatrix2 m);
};

/// f(x,y) = (x + y - k sin(2 pi x), y - k sin(2 pi x)) with k = sigma/(2 pi).
struct StandardMap {
    double sigma = 0.0;
};

struct MapDescriptor {
    std::variant<ToralAutomorphism, StandardMap> kind;
    MapDescriptor(ToralAutomorphism m) : kind(std::move(m)) {}
    MapDescriptor(StandardMap m) : kind(m) {}
};

struct LinearInvolution {
    IntMatrix2 matrix;
    explicit LinearInvolution(IntMatrix2 m);
};

/// R(x,y) = (-x, y - k sin(2 pi x)); reverses the standard map of the same sigma.
struct StandardReversor {
    double sigma = 0.0;
};

struct ReversorDescriptor {
    std::variant<LinearInvolution, StandardReversor> kind;
    ReversorDescriptor(LinearInvolution r) : kind(std::move(r)) {}
    ReversorDescriptor(StandardReversor r) : kind(r) {}
};

TorusPoint apply(const MapDescriptor& f, const TorusPoint& p);
TorusPoint apply_inverse(const MapDescriptor& f, const TorusPoint& p);
Mat2d jacobian(const MapDescriptor& f, const TorusPoint& p);

TorusPoint apply(const ReversorDescriptor& r, const TorusPoint& p);
Mat2d jacobian(const ReversorDescriptor& r, const TorusPoint& p);

std::string describe(const MapDescriptor& f);
std::string describe(const ReversorDescriptor& r);

// -- deterministic sampling --------------------------------------------------

/// Portable uniform double in [0,1) from a 64-bit generator state; avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
class SeededSampler {
  public:
    explicit SeededSampler(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform01();
    TorusPoint torus_point();
    double angle();  // uniform in [0, 2 pi)

  private:
    std::uint64_t state_;
};

/// Stable per-index seed derivation for grid sweeps.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// -- reversibility and exponents ---------------------------------------------

struct ReversibilityResidual {
    double conjugacy = 0.0;   // max distance R(f(p)) vs f^{-1}(R(p))
    double involution = 0.0;  // max distance R(R(p)) vs p
};

/// Max residuals over `samples` seeded random points.
ReversibilityResidual check_reversibility(const MapDescriptor& f, const ReversorDescriptor& r,
                                          long samples, std::uint64_t seed);

struct LyapunovEstimate {
    double lambda_plus = 0.0;  // nats per iteration
    long n = 0;
    long transient = 0;
    int renorm_interval = 1;
    TorusPoint initial_point;
    double initial_angle = 0.0;  // tangent direction drawn from the seed
    std::uint64_t seed = 0;
};

/// Single-vector norm-growth estimator with per-step renormalization.
LyapunovEstimate lyapunov_plus(const MapDescriptor& f, const TorusPoint& p, long n,
                               long transient, std::uint64_t seed);

/// |lambda_plus(p) - lambda_plus(R(p))| at finite time, same estimator
/// parameters on both sides.  Throws NotAReversiblePair unless the pair
/// passes check_reversibility below `reversibility_tol`.
double check_exponent_symmetry(const MapDescriptor& f, const ReversorDescriptor& r,
                               const TorusPoint& p, long n, long transient, std::uint64_t seed,
                               double reversibility_tol = 1e-8,
                               long reversibility_samples = 256);

// -- finite-time Oseledets data ----------------------------------------------

struct OseledetsSplitting {
    Direction unstable;
    Direction stable;
    long iterations = 0;  // depth at which the angular Cauchy criterion held
};

/// Finite-time unstable/stable directions at p: the unstable direction is the
/// forward push of a generic vector from the depth-n backward iterate of p,
/// the stable one the same for the inverse map.  Convergence is detected by
/// comparing depth n against depth 2n (angular Cauchy criterion); returns
/// nullopt when the cap is hit first, the expected outcome in zero-exponent
/// regimes.
std::optional<OseledetsSplitting> oseledets_directions(const MapDescriptor& f,
                                                       const TorusPoint& p,
                                                       long max_iterations = 10000,
                                                       double angular_tol = 1e-9);

struct SplittingSwapAngles {
    double unstable_to_stable = 0.0;  // angle(DR * E^u_p, E^s_{R(p)})
    double stable_to_unstable = 0.0;  // angle(DR * E^s_p, E^u_{R(p)})
};

std::optional<SplittingSwapAngles> check_splitting_swap(const MapDescriptor& f,
                                                        const ReversorDescriptor& r,
                                                        const TorusPoint& p,
                                                        long max_iterations = 10000,
                                                        double angular_tol = 1e-9);

/// ||Df^m restricted to the e_s line|| * ||(Df^m restricted to e_u)^{-1}||
/// along the orbit of p; in dimension one per bundle this is the norm ratio
/// of the images of the two unit directions.
double domination_ratio(const MapDescriptor& f, const TorusPoint& p, int m, const Direction& e_u,
                        const Direction& e_s);

struct SplittingEstimate {
    double e_u_angle = 0.0;  // at the first orbit point, in [0, pi)
    double e_s_angle = 0.0;
    int m = 1;
    double ratio = 0.0;  // worst (largest) ratio over the orbit segment
    long orbit_length = 0;
    bool dominated = false;  // ratio <= 1/2
};

/// m-domination check over an orbit segment; directions are tightened to
/// near machine precision so the ratio is meaningful for large m.
std::optional<SplittingEstimate> domination_check(const MapDescriptor& f, const TorusPoint& p,
                                                  int m, long orbit_length,
                                                  long max_iterations = 10000,
                                                  double angular_tol = 1e-14);

// -- exact rational orbits ----------------------------------------------------

/// Exact point on T^2 with rational coordinates in [0,1).
struct RationalPoint {
    Rat x, y;
    bool operator==(const RationalPoint&) const = default;
};

RationalPoint wrap(RationalPoint p);

/// Parse "x,y" with entries "p/q" or integers; throws NonRationalInput.
RationalPoint parse_rational_point(const std::string& text);

struct FreeOrbitVerdict {
    bool free = false;
    long hit_index = 0;  // i with f^i(p) = R(p), when not free
    long period = 0;     // orbit period when it was fully traversed, else 0
    bool exhaustive = false;
};

/// Exact test whether R(p) lies on the L-orbit of p on the torus.  The orbit
/// of a point with common denominator q is periodic with period <= q^2, so
/// the walk is capped at min(horizon, q^2); when the cap cuts the orbit
/// short, backward iterates down to -horizon are checked too and the verdict
/// is marked non-exhaustive.
FreeOrbitVerdict rf_free_test(const IntMatrix2& l, const IntMatrix2& a, const RationalPoint& p,
                              long horizon);

// -- fixed-point sets ----------------------------------------------------------

struct LinearFixSet {
    FixedLine line;  // closed geodesic through the origin
};

struct ReflectionCircles {
    std::vector<double> x_values;  // vertical circles x = const
};

using FixSet = std::variant<LinearFixSet, ReflectionCircles>;

FixSet fix_set(const ReversorDescriptor& r);

// -- integrated exponent --------------------------------------------------------

struct IntegratedExponentEstimate {
    double value = 0.0;  // min over n of the grid average of (1/n) log ||Df^n||
    std::vector<std::pair<long, double>> per_n;
    bool monotone_nonincreasing = false;
};

/// Grid average of (1/n) log ||Df^n|| at cell centers, minimized over n_list.
IntegratedExponentEstimate integrated_exponent_estimate(const MapDescriptor& f,
                                                        long grid_resolution,
                                                        std::vector<long> n_list, int jobs = 1);

struct LyapunovGridCell {
    TorusPoint point;
    double lambda_plus = 0.0;
};

/// Estimates on a grid of cell centers; per-cell seeds are derived from
/// (seed, cell index) so the result is independent of the job count.
std::vector<LyapunovGridCell> lyapunov_grid(const MapDescriptor& f, long resolution, long n,
                                            long transient, std::uint64_t seed, int jobs = 1);

}  // namespace revtorus
