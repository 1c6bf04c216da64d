#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/error.hpp"
#include "ramsey_loops/geometry.hpp"

namespace ramsey_loops {

/// Query points closer than this to a curve are rejected.
inline constexpr double kRegionTolerance = 1e-9;

/// Winding number of `curve` around `p`: +1 inside a CCW simple curve, -1
/// inside a CW one, 0 outside.
inline int winding_number(const Contour& curve, const Point2& p, double boundary_tolerance = kRegionTolerance) {
    if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "query point must be finite");
    if (curve.distance_to(p) <= boundary_tolerance) {
        throw Error(ErrorCode::OnBoundary, "point lies on the curve");
    }
    if (curve.is_circle()) {
        const auto& c = curve.as_circle();
        if (distance(p, c.center) > c.radius) return 0;
        return curve.orientation() == Orientation::CCW ? 1 : -1;
    }
    const auto v = curve.vertices();
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i] - p;
        const Vec2 b = v[(i + 1) % v.size()] - p;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 0.25) {
        throw Error(ErrorCode::WindingResidual, "winding sum " + std::to_string(turns) + " is not near an integer");
    }
    return static_cast<int>(rounded);
}

/// Winding signature of a point against every curve of an arrangement.
struct RegionLabel {
    std::vector<int> signature;

    friend bool operator==(const RegionLabel&, const RegionLabel&) = default;

    /// "(1,0,0)"; "()" for an empty arrangement.
    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < signature.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(signature[i]);
        }
        return s + ")";
    }
};

/// Simple closed curves, optionally named. Labels identify regions only when
/// the curves are pairwise disjoint.
class Arrangement {
public:
    Arrangement() = default;

    explicit Arrangement(std::vector<Contour> curves, std::vector<std::string> names = {})
        : curves_(std::move(curves)), names_(std::move(names)) {
        if (!names_.empty() && names_.size() != curves_.size()) {
            throw Error(ErrorCode::InvalidArgument, "one name per curve is required");
        }
        for (std::size_t i = 0; i < curves_.size(); ++i) {
            if (!validate_simple(curves_[i])) {
                throw Error(ErrorCode::NotSimple, "curve " + std::to_string(i) + " is not simple");
            }
        }
    }

    [[nodiscard]] std::span<const Contour> curves() const noexcept { return curves_; }
    [[nodiscard]] std::span<const std::string> names() const noexcept { return names_; }

private:
    std::vector<Contour> curves_;
    std::vector<std::string> names_;
};

inline RegionLabel region_of(const Arrangement& arrangement, const Point2& p,
                             double boundary_tolerance = kRegionTolerance) {
    RegionLabel label;
    for (const auto& curve : arrangement.curves()) label.signature.push_back(winding_number(curve, p, boundary_tolerance));
    return label;
}

/// Region labels ordered by point index (entry 0 belongs to point 1).
inline std::vector<RegionLabel> region_labels(const Arrangement& arrangement, std::span<const LabeledPoint> points,
                                              double boundary_tolerance = kRegionTolerance) {
    const std::vector<Point2> pos = detail::positions_by_index(points);
    std::vector<RegionLabel> out;
    out.reserve(pos.size());
    for (const auto& p : pos) out.push_back(region_of(arrangement, p, boundary_tolerance));
    return out;
}

inline VertexLabeling classify(const Arrangement& arrangement, std::span<const LabeledPoint> points,
                               double boundary_tolerance = kRegionTolerance) {
    VertexLabeling labeling;
    for (const auto& label : region_labels(arrangement, points, boundary_tolerance)) {
        labeling.labels.push_back(label.to_string());
    }
    return labeling;
}

/// Green between points of the same region, red across regions.
inline ColoredCompleteGraph region_graph(const Arrangement& arrangement, std::span<const LabeledPoint> points,
                                         double boundary_tolerance = kRegionTolerance) {
    return color_by_labels(classify(arrangement, points, boundary_tolerance));
}

}  // namespace ramsey_loops
