#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/error.hpp"
#include "ramsey_loops/geometry.hpp"

namespace ramsey_loops {

struct ParticleState {
    Point2 position;
    Vec2 direction;  // unit length
};

enum class CornerMode {
    Error,     // stop with ErrorCode::CornerHit
    Bisector,  // reflect about the normalized sum of the two edge normals
};

struct BilliardOptions {
    double min_advance = 1e-9;  // rays must travel further than this
    double corner = 1e-9;       // hits this close to a polyline vertex are corner hits
    double graze = 1e-9;        // |d . n| at or below this is a tangential hit
    CornerMode corner_mode = CornerMode::Error;
    /// Largest angular perturbation (radians) of the outgoing direction; 0 disables.
    double noise_bound = 0.0;
    std::uint64_t noise_seed = 0;
};

struct Bounce {
    Point2 point;
    Vec2 direction;      // after reflection
    Vec2 inward_normal;  // at the hit point
};

namespace detail {

inline Vec2 inward_edge_normal(const Point2& a, const Point2& b, Orientation o) {
    const Vec2 e = normalized(b - a);
    return o == Orientation::CCW ? Vec2{-e.y, e.x} : Vec2{e.y, -e.x};
}

struct Hit {
    Point2 point;
    Vec2 normal;
};

inline Hit circle_hit(const Circle& c, const ParticleState& s, const BilliardOptions& opt) {
    const Vec2 q = s.position - c.center;
    const double b = dot(s.direction, q);
    const double cterm = dot(q, q) - c.radius * c.radius;
    const double disc = b * b - cterm;
    if (disc < 0.0) throw Error(ErrorCode::NoIntersection, "ray misses the circle");
    const double root = std::sqrt(disc);
    // both roots without cancellation
    double t1 = 0.0;
    double t2 = 0.0;
    if (b < 0.0) {
        t2 = -b + root;
        t1 = cterm / t2;
    } else {
        t1 = -b - root;
        t2 = t1 != 0.0 ? cterm / t1 : 0.0;
    }
    if (t1 > t2) std::swap(t1, t2);
    const double t = t1 > opt.min_advance ? t1 : t2;
    if (!(t > opt.min_advance)) throw Error(ErrorCode::NoIntersection, "no forward hit on the circle");
    const Point2 raw = s.position + t * s.direction;
    const Vec2 radial = normalized(raw - c.center);
    return {c.center + c.radius * radial, -radial};
}

inline Hit polyline_hit(const Contour& boundary, const ParticleState& s, const BilliardOptions& opt) {
    const auto v = boundary.vertices();
    const std::size_t n = v.size();
    double best_t = std::numeric_limits<double>::infinity();
    std::size_t best_seg = n;
    double best_u = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const Point2& a = v[j];
        const Vec2 e = v[(j + 1) % n] - a;
        const double denom = cross(s.direction, e);
        if (denom == 0.0) continue;
        const Vec2 ap = a - s.position;
        const double t = cross(ap, e) / denom;
        const double u = cross(ap, s.direction) / denom;
        const double slack = opt.corner / norm(e);
        if (t > opt.min_advance && u >= -slack && u <= 1.0 + slack && t < best_t) {
            best_t = t;
            best_seg = j;
            best_u = u;
        }
    }
    if (best_seg == n) throw Error(ErrorCode::NoIntersection, "ray leaves the polygon without a hit");

    const Point2& a = v[best_seg];
    const Point2& b = v[(best_seg + 1) % n];
    const Point2 hit = a + std::clamp(best_u, 0.0, 1.0) * (b - a);
    const Vec2 normal = inward_edge_normal(a, b, boundary.orientation());

    const bool near_a = distance(hit, a) <= opt.corner;
    const bool near_b = distance(hit, b) <= opt.corner;
    if (!near_a && !near_b) return {hit, normal};
    if (opt.corner_mode == CornerMode::Error) {
        throw Error(ErrorCode::CornerHit, "hit lands on vertex " + std::to_string(near_a ? best_seg : (best_seg + 1) % n));
    }
    const std::size_t corner = near_a ? best_seg : (best_seg + 1) % n;
    const Vec2 before = inward_edge_normal(v[(corner + n - 1) % n], v[corner], boundary.orientation());
    const Vec2 after = inward_edge_normal(v[corner], v[(corner + 1) % n], boundary.orientation());
    const Vec2 sum = before + after;
    if (norm(sum) == 0.0) throw Error(ErrorCode::CornerHit, "corner bisector is undefined");
    return {v[corner], normalized(sum)};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

inline Vec2 specular(const Vec2& d, const Vec2& n) { return d - 2.0 * dot(d, n) * n; }

/// First boundary hit of the ray from `state` and the outgoing direction.
/// `step` selects the noise draw so a trajectory stays reproducible.
inline Bounce next_reflection(const Contour& boundary, const ParticleState& state, const BilliardOptions& options = {},
                              std::uint64_t step = 0) {
    if (!is_finite(state.position) || !is_finite(state.direction) || std::abs(norm(state.direction) - 1.0) > 1e-12) {
        throw Error(ErrorCode::InvalidArgument, "particle direction must be a finite unit vector");
    }
    const detail::Hit hit = boundary.is_circle() ? detail::circle_hit(boundary.as_circle(), state, options)
                                                 : detail::polyline_hit(boundary, state, options);
    const double incidence = dot(state.direction, hit.normal);
    if (std::abs(incidence) <= options.graze) throw Error(ErrorCode::Grazing, "ray is tangent to the boundary");
    if (incidence > 0.0) throw Error(ErrorCode::NoIntersection, "ray reaches the boundary from outside");

    Vec2 out = normalized(specular(state.direction, hit.normal));
    if (options.noise_bound > 0.0) {
        std::mt19937_64 rng(detail::splitmix64(options.noise_seed ^ detail::splitmix64(step)));
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const Vec2 noisy = normalized(rotated(out, (2.0 * u - 1.0) * options.noise_bound));
        if (dot(noisy, hit.normal) > options.graze) out = noisy;
    }
    return {hit.point, out, hit.normal};
}

enum class Termination { Completed, CornerHit, Grazing, NoIntersection };

constexpr std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::Completed: return "completed";
        case Termination::CornerHit: return "corner_hit";
        case Termination::Grazing: return "grazing";
        case Termination::NoIntersection: return "no_intersection";
    }
    return "unknown";
}

struct Trajectory {
    Contour boundary;
    ParticleState start;
    std::vector<LabeledPoint> reflections;  // indexed 1.. in temporal order
    std::vector<Vec2> directions_after;
    std::vector<Vec2> normals;
    Termination termination = Termination::Completed;
    std::string message;
};

/// Runs up to `bounces` reflections; stops early on a corner hit, a grazing
/// hit or a failed intersection and records why.
inline Trajectory simulate(const Contour& boundary, const ParticleState& start, int bounces,
                           const BilliardOptions& options = {}) {
    if (bounces < 1) throw Error(ErrorCode::InvalidArgument, "bounces must be >= 1");
    Trajectory traj{boundary, start, {}, {}, {}, Termination::Completed, {}};
    traj.reflections.reserve(static_cast<std::size_t>(bounces));
    ParticleState state = start;
    for (int k = 0; k < bounces; ++k) {
        Bounce b;
        try {
            b = next_reflection(boundary, state, options, static_cast<std::uint64_t>(k));
        } catch (const Error& e) {
            switch (e.code()) {
                case ErrorCode::CornerHit: traj.termination = Termination::CornerHit; break;
                case ErrorCode::Grazing: traj.termination = Termination::Grazing; break;
                case ErrorCode::NoIntersection: traj.termination = Termination::NoIntersection; break;
                default: throw;
            }
            traj.message = e.what();
            break;
        }
        traj.reflections.push_back({k + 1, b.point, {}});
        traj.directions_after.push_back(b.direction);
        traj.normals.push_back(b.inward_normal);
        state = {b.point, b.direction};
    }
    return traj;
}

inline ColoredCompleteGraph reflections_to_graph(const Trajectory& trajectory, const SlopeOptions& options = {}) {
    if (trajectory.reflections.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least 2 reflection points");
    }
    return color_by_slope(trajectory.reflections, options);
}

}  // namespace ramsey_loops
