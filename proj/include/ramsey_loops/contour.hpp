#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey_loops/error.hpp"
#include "ramsey_loops/geometry.hpp"

namespace ramsey_loops {

/// Distance within which a point counts as lying on a contour.
inline constexpr double kOnContourTolerance = 1e-9;

enum class Orientation { CCW, CW };

constexpr Orientation flipped(Orientation o) {
    return o == Orientation::CCW ? Orientation::CW : Orientation::CCW;
}

struct Circle {
    Point2 center;
    double radius = 1.0;
};

struct ClosedPolyline {
    std::vector<Point2> vertices;
};

/// A differentiable closed curve t -> position(t), t in [0,1).
/// The derivatives are taken with respect to t.
struct ParametricMap {
    std::function<Point2(double)> position;
    std::function<Vec2(double)> first_derivative;
    std::function<Vec2(double)> second_derivative;
};

/// Samples of a parametric curve, joined as a closed polyline. The generator
/// is kept when known so that curvature can be evaluated analytically.
struct SampledParametric {
    std::vector<Point2> points;
    std::optional<ParametricMap> generator;
};

using ContourShape = std::variant<Circle, ClosedPolyline, SampledParametric>;

/// Shoelace formula; positive for counter-clockwise vertex order.
inline double signed_area(std::span<const Point2> vertices) {
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % vertices.size()];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

/// A closed plane curve with a traversal direction.
///
/// For circles the orientation is a flag that sets the direction in which
/// the curve parameter sweeps. For vertex-based variants the orientation is
/// the one implied by the vertex order.
class Contour {
public:
    static Contour circle(Point2 center, double radius, Orientation orientation = Orientation::CCW) {
        if (!is_finite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, "circle needs a finite center and a positive radius");
        }
        return Contour(Circle{center, radius}, orientation);
    }

    /// Builds a closed polyline. When `declared` is given it must agree with
    /// the orientation of the vertex order.
    static Contour polyline(std::vector<Point2> vertices, std::optional<Orientation> declared = std::nullopt) {
        const Orientation o = vertex_orientation(vertices, declared);
        return Contour(ClosedPolyline{std::move(vertices)}, o);
    }

    static Contour sampled(std::vector<Point2> points, std::optional<ParametricMap> generator = std::nullopt,
                           std::optional<Orientation> declared = std::nullopt) {
        const Orientation o = vertex_orientation(points, declared);
        return Contour(SampledParametric{std::move(points), std::move(generator)}, o);
    }

    /// Samples `map` at t = i / count for i = 0 .. count-1.
    static Contour from_parametric(ParametricMap map, std::size_t count) {
        if (count < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 samples");
        std::vector<Point2> points;
        points.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            points.push_back(map.position(static_cast<double>(i) / static_cast<double>(count)));
        }
        return sampled(std::move(points), std::move(map));
    }

    [[nodiscard]] const ContourShape& shape() const noexcept { return shape_; }
    [[nodiscard]] Orientation orientation() const noexcept { return orientation_; }

    [[nodiscard]] bool is_circle() const noexcept { return std::holds_alternative<Circle>(shape_); }
    [[nodiscard]] bool is_polyline() const noexcept { return std::holds_alternative<ClosedPolyline>(shape_); }
    [[nodiscard]] bool is_sampled() const noexcept { return std::holds_alternative<SampledParametric>(shape_); }

    [[nodiscard]] const Circle& as_circle() const { return std::get<Circle>(shape_); }

    /// Vertices of a polyline or sampled contour; empty for a circle.
    [[nodiscard]] std::span<const Point2> vertices() const noexcept {
        if (const auto* p = std::get_if<ClosedPolyline>(&shape_)) return p->vertices;
        if (const auto* s = std::get_if<SampledParametric>(&shape_)) return s->points;
        return {};
    }

    [[nodiscard]] const ParametricMap* generator() const noexcept {
        if (const auto* s = std::get_if<SampledParametric>(&shape_); s && s->generator) return &*s->generator;
        return nullptr;
    }

    /// Same point set traversed the other way. Vertex 0 stays first, vertex i
    /// becomes vertex n-i.
    [[nodiscard]] Contour reversed() const {
        if (is_circle()) return Contour(as_circle(), flipped(orientation_));
        auto flip_order = [](std::span<const Point2> v) {
            std::vector<Point2> out;
            out.reserve(v.size());
            out.push_back(v.front());
            for (std::size_t i = v.size() - 1; i >= 1; --i) out.push_back(v[i]);
            return out;
        };
        if (is_polyline()) return Contour(ClosedPolyline{flip_order(vertices())}, flipped(orientation_));
        const auto& s = std::get<SampledParametric>(shape_);
        std::optional<ParametricMap> gen;
        if (s.generator) {
            const ParametricMap g = *s.generator;
            auto mirror = [](double t) { return t == 0.0 ? 0.0 : 1.0 - t; };
            gen = ParametricMap{
                [g, mirror](double t) { return g.position(mirror(t)); },
                [g, mirror](double t) { return -g.first_derivative(mirror(t)); },
                [g, mirror](double t) { return g.second_derivative(mirror(t)); },
            };
        }
        return Contour(SampledParametric{flip_order(s.points), std::move(gen)}, flipped(orientation_));
    }

    /// Total arc length.
    [[nodiscard]] double perimeter() const {
        if (is_circle()) return 2.0 * std::numbers::pi * as_circle().radius;
        double total = 0.0;
        const auto v = vertices();
        for (std::size_t i = 0; i < v.size(); ++i) total += distance(v[i], v[(i + 1) % v.size()]);
        return total;
    }

    /// Point at normalized arc length `t` in [0,1), measured from angle 0 for
    /// circles and from vertex 0 otherwise, in the traversal direction.
    [[nodiscard]] Point2 point_at(double t) const {
        if (is_circle()) {
            const auto& c = as_circle();
            const double sign = orientation_ == Orientation::CCW ? 1.0 : -1.0;
            const double angle = sign * 2.0 * std::numbers::pi * t;
            return {c.center.x + c.radius * std::cos(angle), c.center.y + c.radius * std::sin(angle)};
        }
        const auto v = vertices();
        const double target = t * perimeter();
        double walked = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            const double len = distance(a, b);
            if (target < walked + len || i + 1 == v.size()) {
                if (len == 0.0) return a;
                const double u = std::clamp((target - walked) / len, 0.0, 1.0);
                return a + u * (b - a);
            }
            walked += len;
        }
        return v.front();
    }

    /// Euclidean distance from `p` to the curve.
    [[nodiscard]] double distance_to(const Point2& p) const {
        if (is_circle()) {
            const auto& c = as_circle();
            return std::abs(distance(p, c.center) - c.radius);
        }
        const auto v = vertices();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < v.size(); ++i) {
            best = std::min(best, distance_to_segment(p, v[i], v[(i + 1) % v.size()]));
        }
        return best;
    }

private:
    Contour(ContourShape shape, Orientation orientation) : shape_(std::move(shape)), orientation_(orientation) {}

    static Orientation vertex_orientation(std::span<const Point2> vertices, std::optional<Orientation> declared) {
        if (vertices.size() < 3) throw Error(ErrorCode::InvalidArgument, "closed contour needs at least 3 vertices");
        for (const auto& p : vertices) {
            if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
        }
        const double area = signed_area(vertices);
        // zero area (a symmetric bowtie, collinear vertices) has no orientation;
        // such contours are never simple
        if (area == 0.0) return declared.value_or(Orientation::CCW);
        const Orientation actual = area > 0.0 ? Orientation::CCW : Orientation::CW;
        if (declared && *declared != actual) {
            throw Error(ErrorCode::InvalidArgument, "declared orientation disagrees with vertex order");
        }
        return actual;
    }

    ContourShape shape_;
    Orientation orientation_;
};

/// Ellipse with semi-axes a (along x) and b (along y), sampled at `count`
/// points, keeping the analytic generator.
inline Contour make_ellipse(Point2 center, double a, double b, std::size_t count,
                            Orientation orientation = Orientation::CCW) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "ellipse semi-axes must be positive");
    const double w = (orientation == Orientation::CCW ? 1.0 : -1.0) * 2.0 * std::numbers::pi;
    ParametricMap map{
        [=](double t) { return Point2{center.x + a * std::cos(w * t), center.y + b * std::sin(w * t)}; },
        [=](double t) { return Vec2{-a * w * std::sin(w * t), b * w * std::cos(w * t)}; },
        [=](double t) { return Vec2{-a * w * w * std::cos(w * t), -b * w * w * std::sin(w * t)}; },
    };
    return Contour::from_parametric(std::move(map), count);
}

/// Regular polygon with `sides` vertices on a circle, first vertex at angle `phase`.
inline Contour make_regular_polygon(Point2 center, double radius, std::size_t sides, double phase = 0.0,
                                    Orientation orientation = Orientation::CCW) {
    std::vector<Point2> v;
    v.reserve(sides);
    const double sign = orientation == Orientation::CCW ? 1.0 : -1.0;
    for (std::size_t i = 0; i < sides; ++i) {
        const double angle = phase + sign * 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(sides);
        v.push_back({center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
    }
    return Contour::polyline(std::move(v));
}

/// An indexed point participating in a complete graph; indices start at 1.
struct LabeledPoint {
    int index = 1;
    Point2 position;
    std::optional<double> curve_param;
};

/// Signed curvature at a point of a curve.
struct CurvatureSample {
    Point2 at;
    std::optional<double> param;
    double kappa = 0.0;
    std::optional<double> y_prime;
    std::optional<double> y_double_prime;
};

/// True iff no two non-adjacent edges meet. Circles are always simple.
inline bool validate_simple(const Contour& contour) {
    if (contour.is_circle()) return true;
    const auto v = contour.vertices();
    if (signed_area(v) == 0.0) return false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
        }
    }
    return true;
}

/// Points at the given normalized arc-length parameters, indexed 1..n.
inline std::vector<LabeledPoint> sample_points(const Contour& contour, std::span<const double> params) {
    if (params.empty()) throw Error(ErrorCode::InvalidArgument, "at least one parameter is required");
    std::vector<LabeledPoint> out;
    out.reserve(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double t = params[i];
        if (!std::isfinite(t) || t < 0.0 || t >= 1.0) {
            throw Error(ErrorCode::InvalidArgument, "parameter " + std::to_string(t) + " outside [0,1)");
        }
        if (i > 0 && !(t > params[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "parameters must be strictly increasing");
        }
        out.push_back({static_cast<int>(i) + 1, contour.point_at(t), t});
    }
    return out;
}

/// Graph-form signed curvature y'' / (1 + y'^2)^(3/2).
inline double signed_curvature_graph(double y_prime, double y_double_prime) {
    return y_double_prime / std::pow(1.0 + y_prime * y_prime, 1.5);
}

/// Parametric signed curvature (x'y'' - y'x'') / (x'^2 + y'^2)^(3/2). For
/// the graph parameterization (t, y(t)) this reduces to the graph form.
inline double signed_curvature_from_derivatives(const Vec2& d1, const Vec2& d2) {
    return cross(d1, d2) / std::pow(dot(d1, d1), 1.5);
}

inline CurvatureSample signed_curvature_parametric(const Contour& contour, double param) {
    if (!std::isfinite(param)) throw Error(ErrorCode::InvalidArgument, "parameter must be finite");
    if (contour.is_circle()) {
        const double k = 1.0 / contour.as_circle().radius;
        return {contour.point_at(param), param, contour.orientation() == Orientation::CCW ? k : -k, {}, {}};
    }
    const ParametricMap* gen = contour.generator();
    if (gen == nullptr) {
        throw Error(ErrorCode::UnsupportedContour,
                    "analytic curvature needs a circle or a parametric generator; use discrete_curvature");
    }
    const Vec2 d1 = gen->first_derivative(param);
    const Vec2 d2 = gen->second_derivative(param);
    if (dot(d1, d1) == 0.0) throw Error(ErrorCode::InvalidArgument, "singular parameterization");
    return {gen->position(param), param, signed_curvature_from_derivatives(d1, d2), {}, {}};
}

/// Signed inverse circumradius of the vertices around `vertex_index`
/// (0-based). Positive at left turns.
inline double discrete_curvature(const Contour& contour, std::size_t vertex_index) {
    if (contour.is_circle()) {
        throw Error(ErrorCode::UnsupportedContour, "discrete curvature needs a vertex-based contour");
    }
    const auto v = contour.vertices();
    const std::size_t n = v.size();
    if (vertex_index >= n) throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
    const Point2& a = v[(vertex_index + n - 1) % n];
    const Point2& b = v[vertex_index];
    const Point2& c = v[(vertex_index + 1) % n];
    const double ab = distance(a, b);
    const double bc = distance(b, c);
    const double ac = distance(a, c);
    if (ab == 0.0 || bc == 0.0 || ac == 0.0) {
        throw Error(ErrorCode::ZeroLengthEdge, "coincident vertices around index " + std::to_string(vertex_index));
    }
    return 2.0 * cross(b - a, c - b) / (ab * bc * ac);
}

}  // namespace ramsey_loops
