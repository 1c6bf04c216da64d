#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ramsey_loops/billiard.hpp"
#include "ramsey_loops/ramsey.hpp"
#include "ramsey_loops/regions.hpp"

using namespace ramsey_loops;

namespace {

const double kSqrt2 = std::sqrt(2.0);

Contour unit_square() { return Contour::polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

void expect_near(Point2 a, Point2 b, double tol) {
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
}

SlopeOptions perturbed(std::uint64_t seed = kDefaultJitterSeed) {
    SlopeOptions o;
    o.policy = DegeneracyPolicy::Perturb;
    o.seed = seed;
    return o;
}

/// Checks the per-bounce contract on a finished trajectory.
void expect_physical(const Trajectory& t, double tol) {
    ParticleState prev = t.start;
    for (std::size_t i = 0; i < t.reflections.size(); ++i) {
        const Vec2 d_in = prev.direction;
        const Vec2 d_out = t.directions_after[i];
        const Vec2 n = t.normals[i];
        EXPECT_NEAR(norm(d_out), 1.0, 1e-12);
        EXPECT_NEAR(norm(n), 1.0, 1e-12);
        EXPECT_NEAR(dot(d_in, n), -dot(d_out, n), tol);
        EXPECT_LT(dot(d_in, n), 0.0);
        EXPECT_LE(t.boundary.distance_to(t.reflections[i].position), tol);
        EXPECT_EQ(t.reflections[i].index, static_cast<int>(i) + 1);
        prev = {t.reflections[i].position, d_out};
    }
}

}  // namespace

TEST(NextReflection, DiameterBounceReverses) {
    const auto b = next_reflection(Contour::circle({0, 0}, 1.0), {{0, 0}, {1, 0}});
    expect_near(b.point, {1, 0}, 1e-15);
    expect_near(b.direction, {-1, 0}, 1e-15);
    expect_near(b.inward_normal, {-1, 0}, 1e-15);
}

TEST(NextReflection, SquareNormalIncidence) {
    const auto b = next_reflection(unit_square(), {{0.5, 0.5}, {0, 1}});
    expect_near(b.point, {0.5, 1}, 1e-15);
    expect_near(b.direction, {0, -1}, 1e-15);
}

TEST(NextReflection, SquareObliqueHit) {
    const auto b = next_reflection(unit_square(), {{0.25, 0}, {1 / kSqrt2, 1 / kSqrt2}});
    expect_near(b.point, {1, 0.75}, 1e-15);
    expect_near(b.direction, {-1 / kSqrt2, 1 / kSqrt2}, 1e-15);
}

TEST(NextReflection, ClockwiseSquareGivesSameBounce) {
    const auto cw = unit_square().reversed();
    ASSERT_EQ(cw.orientation(), Orientation::CW);
    const auto b = next_reflection(cw, {{0.25, 0}, {1 / kSqrt2, 1 / kSqrt2}});
    expect_near(b.point, {1, 0.75}, 1e-15);
    expect_near(b.inward_normal, {-1, 0}, 1e-15);
}

TEST(NextReflection, Errors) {
    const auto sq = unit_square();
    auto code = [&](ParticleState s, BilliardOptions o = {}) {
        try {
            next_reflection(sq, s, o);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code({{0.5, 0.5}, {1 / kSqrt2, 1 / kSqrt2}}), ErrorCode::CornerHit);
    EXPECT_THROW(next_reflection(sq, {{0.5, 0.5}, {1, 1}}), Error);
    EXPECT_EQ(code({{0.5, 0.5}, {std::nan(""), 0}}), ErrorCode::InvalidArgument);
    // starting outside and heading away
    EXPECT_EQ(code({{0.5, 2.0}, {0, 1}}), ErrorCode::NoIntersection);
}

TEST(NextReflection, BisectorCorner) {
    BilliardOptions o;
    o.corner_mode = CornerMode::Bisector;
    const auto b = next_reflection(unit_square(), {{0.5, 0.5}, {1 / kSqrt2, 1 / kSqrt2}}, o);
    expect_near(b.point, {1, 1}, 0.0);
    expect_near(b.inward_normal, {-1 / kSqrt2, -1 / kSqrt2}, 1e-15);
    expect_near(b.direction, {-1 / kSqrt2, -1 / kSqrt2}, 1e-15);
}

TEST(Simulate, HexagonOrbitOnUnitCircle) {
    const double third = std::numbers::pi / 3.0;
    const auto t = simulate(Contour::circle({0, 0}, 1.0), {{1, 0}, {-0.5, std::sqrt(3.0) / 2.0}}, 6);
    ASSERT_EQ(t.termination, Termination::Completed);
    ASSERT_EQ(t.reflections.size(), 6U);
    for (int k = 0; k < 6; ++k) {
        const double a = third * (k + 1);
        expect_near(t.reflections[k].position, {std::cos(a), std::sin(a)}, 1e-12);
    }
    const double l0 = distance(t.reflections[0].position, t.reflections[1].position);
    EXPECT_NEAR(l0, 1.0, 1e-12);
    for (int k = 1; k + 1 < 6; ++k) {
        EXPECT_LE(std::abs(distance(t.reflections[k].position, t.reflections[k + 1].position) - l0), 1e-9);
    }
    expect_physical(t, 1e-9);

    // hexagon chords include horizontal and vertical pairs
    EXPECT_THROW(reflections_to_graph(t), Error);
    const auto g = reflections_to_graph(t, perturbed());
    EXPECT_EQ(g.edge_count(), 15U);
    EXPECT_TRUE(has_monochromatic_triangle(g));
    EXPECT_EQ(g.jitter_seed, std::optional<std::uint64_t>{kDefaultJitterSeed});
}

TEST(Simulate, SquareVerticalOscillation) {
    const auto t = simulate(unit_square(), {{0.5, 0.5}, {0, 1}}, 4);
    ASSERT_EQ(t.reflections.size(), 4U);
    expect_near(t.reflections[0].position, {0.5, 1}, 0.0);
    expect_near(t.reflections[1].position, {0.5, 0}, 0.0);
    expect_near(t.reflections[2].position, {0.5, 1}, 0.0);
    expect_near(t.reflections[3].position, {0.5, 0}, 0.0);
    try {
        reflections_to_graph(t);
        ADD_FAILURE() << "expected DegenerateSlope";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateSlope);
    }
}

TEST(Simulate, CornerStopsEarlyAndRecordsCause) {
    const auto t = simulate(unit_square(), {{0.25, 0.5}, {0, 1}}, 3);
    EXPECT_EQ(t.termination, Termination::Completed);
    const auto c = simulate(unit_square(), {{0.5, 0.5}, {1 / kSqrt2, 1 / kSqrt2}}, 6);
    EXPECT_EQ(c.termination, Termination::CornerHit);
    EXPECT_TRUE(c.reflections.empty());
    EXPECT_FALSE(c.message.empty());
    EXPECT_EQ(to_string(c.termination), "corner_hit");
    EXPECT_THROW(simulate(unit_square(), {{0.5, 0.5}, {0, 1}}, 0), Error);
}

TEST(Simulate, LongCircleRunKeepsChordLength) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double r = 0.1 + 10.0 * u(rng);
        const Point2 c{u(rng) * 5 - 2.5, u(rng) * 5 - 2.5};
        const double a = 2 * std::numbers::pi * u(rng);
        const Point2 start = c + Vec2{0.5 * r * u(rng), 0.0};
        const auto t = simulate(Contour::circle(c, r), {start, {std::cos(a), std::sin(a)}}, 1000);
        ASSERT_EQ(t.termination, Termination::Completed);
        expect_physical(t, 1e-9 * std::max(1.0, r));
        const double l0 = distance(t.reflections[0].position, t.reflections[1].position);
        for (std::size_t k = 1; k + 1 < t.reflections.size(); ++k) {
            ASSERT_LE(std::abs(distance(t.reflections[k].position, t.reflections[k + 1].position) - l0), 1e-9 * r);
        }
    }
}

TEST(Simulate, PolygonAndEllipseInvariants) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<Contour> boundaries{
        make_regular_polygon({0, 0}, 2.0, 7, 0.3),
        make_ellipse({1, -1}, 3.0, 1.5, 200),
        unit_square(),
    };
    for (const auto& boundary : boundaries) {
        for (int trial = 0; trial < 20; ++trial) {
            const double a = 2 * std::numbers::pi * u(rng);
            // vertex average lies inside these convex shapes
            Point2 inside{0, 0};
            for (const auto& v : boundary.vertices()) inside = inside + v;
            inside = inside * (1.0 / static_cast<double>(boundary.vertices().size()));
            const auto t = simulate(boundary, {inside, {std::cos(a), std::sin(a)}}, 300);
            expect_physical(t, 1e-9);
            // each flight segment stays inside: the midpoint winds once
            for (std::size_t k = 0; k + 1 < t.reflections.size(); ++k) {
                const Point2 mid = (t.reflections[k].position + t.reflections[k + 1].position) * 0.5;
                if (boundary.distance_to(mid) > 1e-9) {
                    EXPECT_EQ(winding_number(boundary, mid), 1);
                }
            }
        }
    }
}

TEST(Simulate, EverySixWindowHasMonochromaticTriangle) {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto boundary = make_regular_polygon({0, 0}, 1.0, 5, 0.1);
    const auto t = simulate(boundary, {{0.05, -0.02}, rotated({1, 0}, 2 * std::numbers::pi * u(rng))}, 120);
    for (std::size_t w = 0; w + 6 <= t.reflections.size(); ++w) {
        std::vector<LabeledPoint> window;
        for (std::size_t j = 0; j < 6; ++j) window.push_back({static_cast<int>(j) + 1, t.reflections[w + j].position, {}});
        try {
            EXPECT_TRUE(has_monochromatic_triangle(color_by_slope(window)));
        } catch (const Error&) {
            // degenerate windows carry no claim
        }
    }
}

TEST(Simulate, NoiseIsSeededAndBounded) {
    BilliardOptions o;
    o.noise_bound = 0.05;
    o.noise_seed = 11;
    const auto circle = Contour::circle({0, 0}, 1.0);
    const ParticleState s{{0.2, 0.1}, normalized(Vec2{0.3, 1.0})};
    const auto a = simulate(circle, s, 50, o);
    const auto b = simulate(circle, s, 50, o);
    ASSERT_EQ(a.reflections.size(), b.reflections.size());
    for (std::size_t k = 0; k < a.reflections.size(); ++k) {
        EXPECT_EQ(a.reflections[k].position.x, b.reflections[k].position.x);
        EXPECT_EQ(a.reflections[k].position.y, b.reflections[k].position.y);
        EXPECT_NEAR(norm(a.directions_after[k]), 1.0, 1e-12);
        EXPECT_LE(circle.distance_to(a.reflections[k].position), 1e-9);
    }
    o.noise_seed = 12;
    const auto c = simulate(circle, s, 50, o);
    EXPECT_NE(a.reflections.back().position.x, c.reflections.back().position.x);
    // deviation from the specular direction is within the bound
    ParticleState prev = s;
    for (std::size_t k = 0; k < a.reflections.size(); ++k) {
        const Vec2 pure = specular(prev.direction, a.normals[k]);
        const double angle = std::acos(std::clamp(dot(pure, a.directions_after[k]), -1.0, 1.0));
        EXPECT_LE(angle, 0.05 + 1e-7);
        prev = {a.reflections[k].position, a.directions_after[k]};
    }
}

TEST(ReflectionsToGraph, TwoPointsAndTooFew) {
    const auto t = simulate(Contour::circle({0, 0}, 1.0), {{0, 0}, normalized(Vec2{1, 0.4})}, 2);
    const auto g = reflections_to_graph(t);
    EXPECT_EQ(g.n(), 2);
    EXPECT_EQ(g.edge_count(), 1U);
    auto one = t;
    one.reflections.resize(1);
    EXPECT_THROW(reflections_to_graph(one), Error);
}
