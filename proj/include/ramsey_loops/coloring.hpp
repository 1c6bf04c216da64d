#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/error.hpp"
#include "ramsey_loops/geometry.hpp"

namespace ramsey_loops {

enum class EdgeColor : std::uint8_t { Red, Green };

constexpr EdgeColor swapped(EdgeColor c) { return c == EdgeColor::Red ? EdgeColor::Green : EdgeColor::Red; }

constexpr std::string_view to_string(EdgeColor c) { return c == EdgeColor::Red ? "red" : "green"; }

/// The line y = alpha * x + beta through points i and k (i < k).
struct ChordLine {
    int i = 1;
    int k = 2;
    double alpha = 0.0;
    double beta = 0.0;
};

using Label = std::string;

struct LabelPair {
    Label first;
    Label second;
};

/// Why an edge got its color. std::monostate marks a color assigned directly
/// (enumeration, file input).
using EdgeProvenance = std::variant<std::monostate, ChordLine, LabelPair>;

/// Index of the unordered pair {i,k} (1-based) in edge-lexicographic order
/// (1,2), (1,3), ..., (1,n), (2,3), ...
constexpr std::size_t edge_index(int n, int i, int k) {
    if (i > k) std::swap(i, k);
    const auto a = static_cast<std::size_t>(i - 1);
    return a * static_cast<std::size_t>(2 * n - i) / 2 + static_cast<std::size_t>(k - i - 1);
}

constexpr std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Complete graph on vertices 1..n with one of two colors per edge.
class ColoredCompleteGraph {
public:
    explicit ColoredCompleteGraph(int n, EdgeColor fill = EdgeColor::Green) : n_(n) {
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "a colored complete graph needs n >= 2");
        colors_.assign(pair_count(n), fill);
        provenance_.assign(pair_count(n), std::monostate{});
    }

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return colors_.size(); }

    [[nodiscard]] EdgeColor color(int i, int k) const { return colors_[checked_index(i, k)]; }
    void set_color(int i, int k, EdgeColor c) { colors_[checked_index(i, k)] = c; }

    [[nodiscard]] const EdgeProvenance& provenance(int i, int k) const { return provenance_[checked_index(i, k)]; }
    void set_provenance(int i, int k, EdgeProvenance p) { provenance_[checked_index(i, k)] = std::move(p); }

    /// Colors in edge-lexicographic order.
    [[nodiscard]] std::span<const EdgeColor> colors() const noexcept { return colors_; }

    /// Seed of the jitter applied before coloring, if any was needed.
    std::optional<std::uint64_t> jitter_seed;

    [[nodiscard]] ColoredCompleteGraph color_swapped() const {
        ColoredCompleteGraph out = *this;
        for (auto& c : out.colors_) c = swapped(c);
        return out;
    }

private:
    [[nodiscard]] std::size_t checked_index(int i, int k) const {
        if (i == k || i < 1 || k < 1 || i > n_ || k > n_) {
            throw Error(ErrorCode::InvalidArgument,
                        "no edge {" + std::to_string(i) + "," + std::to_string(k) + "} in K" + std::to_string(n_));
        }
        return edge_index(n_, i, k);
    }

    int n_;
    std::vector<EdgeColor> colors_;
    std::vector<EdgeProvenance> provenance_;
};

/// Per-vertex discrete labels; labels[i-1] belongs to vertex i.
struct VertexLabeling {
    std::vector<Label> labels;

    [[nodiscard]] int n() const noexcept { return static_cast<int>(labels.size()); }
    [[nodiscard]] const Label& operator()(int vertex) const { return labels.at(static_cast<std::size_t>(vertex - 1)); }
};

enum class DegeneracyPolicy { Reject, Perturb };

inline constexpr std::uint64_t kDefaultJitterSeed = 0x5eed'2a3b'0000'0006ULL;

struct SlopeOptions {
    DegeneracyPolicy policy = DegeneracyPolicy::Reject;
    /// |dy| <= slope_tolerance * max(1, |y_i|, |y_k|) counts as a zero slope.
    double slope_tolerance = 1e-12;
    /// |dx| <= vertical_tolerance * max(1, |x_i|, |x_k|) counts as vertical.
    double vertical_tolerance = 1e-12;
    /// Jitter half-width, relative to max(1, largest coordinate magnitude).
    double jitter = 1e-9;
    std::uint64_t seed = kDefaultJitterSeed;
};

/// Chord between two labeled points. The result is ordered so that i < k and
/// beta is computed from the lower-indexed point, so swapping the arguments
/// gives a bit-identical line.
inline ChordLine chord(const LabeledPoint& p_i, const LabeledPoint& p_k, const SlopeOptions& options = {}) {
    const LabeledPoint& lo = p_i.index < p_k.index ? p_i : p_k;
    const LabeledPoint& hi = p_i.index < p_k.index ? p_k : p_i;
    const Point2 a = lo.position;
    const Point2 b = hi.position;
    if (a == b) {
        throw Error(ErrorCode::CoincidentPoints,
                    "points " + std::to_string(lo.index) + " and " + std::to_string(hi.index) + " coincide");
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    if (std::abs(dx) <= options.vertical_tolerance * std::max({1.0, std::abs(a.x), std::abs(b.x)})) {
        throw Error(ErrorCode::DegenerateSlope,
                    "chord " + std::to_string(lo.index) + "-" + std::to_string(hi.index) + " is vertical");
    }
    const double alpha = dy / dx;
    return {lo.index, hi.index, alpha, a.y - alpha * a.x};
}

namespace detail {

/// Positions ordered by index; the indices must be exactly 1..n.
inline std::vector<Point2> positions_by_index(std::span<const LabeledPoint> points) {
    std::vector<Point2> out(points.size());
    std::vector<bool> seen(points.size(), false);
    for (const auto& p : points) {
        if (p.index < 1 || static_cast<std::size_t>(p.index) > points.size() || seen[p.index - 1]) {
            throw Error(ErrorCode::InvalidArgument, "point indices must be distinct and run from 1 to n");
        }
        if (!is_finite(p.position)) throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
        seen[p.index - 1] = true;
        out[p.index - 1] = p.position;
    }
    return out;
}

inline bool is_flat(const Point2& a, const Point2& b, const SlopeOptions& o) {
    return std::abs(b.y - a.y) <= o.slope_tolerance * std::max({1.0, std::abs(a.y), std::abs(b.y)});
}

inline bool is_vertical(const Point2& a, const Point2& b, const SlopeOptions& o) {
    return std::abs(b.x - a.x) <= o.vertical_tolerance * std::max({1.0, std::abs(a.x), std::abs(b.x)});
}

inline void require_distinct(const std::vector<Point2>& pos) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t k = i + 1; k < pos.size(); ++k) {
            if (pos[i] == pos[k]) {
                throw Error(ErrorCode::CoincidentPoints,
                            "points " + std::to_string(i + 1) + " and " + std::to_string(k + 1) + " coincide");
            }
        }
    }
}

/// First degenerate pair in edge-lexicographic order, or {0,0}.
inline std::pair<int, int> first_degenerate_pair(const std::vector<Point2>& pos, const SlopeOptions& o) {
    const int n = static_cast<int>(pos.size());
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            if (is_flat(pos[i - 1], pos[k - 1], o) || is_vertical(pos[i - 1], pos[k - 1], o)) return {i, k};
        }
    }
    return {0, 0};
}

inline std::vector<Point2> jittered(std::vector<Point2> pos, const SlopeOptions& o) {
    double scale = 1.0;
    for (const auto& p : pos) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    std::mt19937_64 rng(o.seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (auto& p : pos) {
        p.x += (2.0 * unit() - 1.0) * o.jitter * scale;
        p.y += (2.0 * unit() - 1.0) * o.jitter * scale;
    }
    return pos;
}

}  // namespace detail

/// Colors edge {i,k} red when the chord slope is positive and green when it
/// is negative. Zero and vertical slopes are rejected or, under
/// DegeneracyPolicy::Perturb, removed by one deterministic jitter of all
/// points.
inline ColoredCompleteGraph color_by_slope(std::span<const LabeledPoint> points, const SlopeOptions& options = {}) {
    if (points.size() < 2) throw Error(ErrorCode::InvalidArgument, "slope coloring needs at least 2 points");
    std::vector<Point2> pos = detail::positions_by_index(points);
    std::optional<std::uint64_t> seed_used;

    // Reject reports the first bad chord in edge order; jitter cannot
    // separate coincident points, so Perturb checks those up front.
    if (options.policy == DegeneracyPolicy::Perturb) detail::require_distinct(pos);
    if (auto [i, k] = detail::first_degenerate_pair(pos, options); i != 0) {
        if (options.policy == DegeneracyPolicy::Reject) {
            if (pos[i - 1] == pos[k - 1]) {
                throw Error(ErrorCode::CoincidentPoints,
                            "points " + std::to_string(i) + " and " + std::to_string(k) + " coincide");
            }
            throw Error(ErrorCode::DegenerateSlope,
                        "chord " + std::to_string(i) + "-" + std::to_string(k) + " has zero or undefined slope");
        }
        pos = detail::jittered(std::move(pos), options);
        seed_used = options.seed;
        if (auto [i2, k2] = detail::first_degenerate_pair(pos, options); i2 != 0) {
            throw Error(ErrorCode::DegenerateSlope, "chord " + std::to_string(i2) + "-" + std::to_string(k2) +
                                                        " still degenerate after jitter");
        }
    }

    const int n = static_cast<int>(pos.size());
    ColoredCompleteGraph graph(n);
    graph.jitter_seed = seed_used;
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            const ChordLine line = chord({i, pos[i - 1], {}}, {k, pos[k - 1], {}}, options);
            graph.set_color(i, k, line.alpha > 0.0 ? EdgeColor::Red : EdgeColor::Green);
            graph.set_provenance(i, k, line);
        }
    }
    return graph;
}

/// Equality coloring: green between equal labels, red otherwise.
inline ColoredCompleteGraph color_by_labels(const VertexLabeling& labeling) {
    const int n = labeling.n();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "label coloring needs at least 2 vertices");
    ColoredCompleteGraph graph(n);
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            const Label& a = labeling(i);
            const Label& b = labeling(k);
            graph.set_color(i, k, a == b ? EdgeColor::Green : EdgeColor::Red);
            graph.set_provenance(i, k, LabelPair{a, b});
        }
    }
    return graph;
}

/// "+", "-" or "0" per curvature value.
inline VertexLabeling label_by_curvature_sign(std::span<const double> kappas) {
    VertexLabeling out;
    out.labels.reserve(kappas.size());
    for (double k : kappas) out.labels.emplace_back(k > 0.0 ? "+" : (k < 0.0 ? "-" : "0"));
    return out;
}

}  // namespace ramsey_loops
