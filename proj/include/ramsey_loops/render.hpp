#pragma once

// Static SVG drawings of contours, labeled points, colored edges and
// monochromatic triangles. Output is a pure function of the scene.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/ramsey.hpp"

namespace ramsey_loops {

struct Scene {
    std::string title;
    std::vector<Contour> contours;
    std::vector<Point2> points;  // points[i] is vertex i+1
    std::optional<ColoredCompleteGraph> graph;
    std::vector<MonochromaticClique> triangles;
    std::vector<Point2> path;  // billiard flight segments, drawn as a polyline
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Viewport {
    double min_x, min_y, scale, offset_x, panel;

    [[nodiscard]] double sx(double x) const { return offset_x + (x - min_x) * scale; }
    [[nodiscard]] double sy(double y) const { return panel - (y - min_y) * scale; }
};

inline Viewport fit(const Scene& scene, double offset_x, double panel, double margin) {
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;
    auto grow = [&](const Point2& p) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    };
    for (const auto& c : scene.contours) {
        if (c.is_circle()) {
            const auto& circ = c.as_circle();
            grow({circ.center.x - circ.radius, circ.center.y - circ.radius});
            grow({circ.center.x + circ.radius, circ.center.y + circ.radius});
        } else {
            for (const auto& p : c.vertices()) grow(p);
        }
    }
    for (const auto& p : scene.points) grow(p);
    for (const auto& p : scene.path) grow(p);
    if (lo_x > hi_x) {
        lo_x = lo_y = -1.0;
        hi_x = hi_y = 1.0;
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    const double scale = (panel - 2.0 * margin) / span;
    // center the drawing inside the panel
    const double pad_x = (panel - 2.0 * margin - (hi_x - lo_x) * scale) / 2.0;
    const double pad_y = (panel - 2.0 * margin - (hi_y - lo_y) * scale) / 2.0;
    return {lo_x - (margin + pad_x) / scale, lo_y - (margin + pad_y) / scale, scale, offset_x, panel};
}

inline std::string contour_path(const Contour& c, const Viewport& vp) {
    std::string d;
    if (c.is_circle()) {
        const auto& circ = c.as_circle();
        const std::string r = fmt(circ.radius * vp.scale);
        const std::string right = fmt(vp.sx(circ.center.x + circ.radius)) + "," + fmt(vp.sy(circ.center.y));
        const std::string left = fmt(vp.sx(circ.center.x - circ.radius)) + "," + fmt(vp.sy(circ.center.y));
        d = "M " + right + " A " + r + " " + r + " 0 1 0 " + left + " A " + r + " " + r + " 0 1 0 " + right + " Z";
    } else {
        const auto v = c.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            d += (i == 0 ? "M " : " L ") + fmt(vp.sx(v[i].x)) + "," + fmt(vp.sy(v[i].y));
        }
        d += " Z";
    }
    return d;
}

inline const char* stroke(EdgeColor c) { return c == EdgeColor::Red ? "#d62728" : "#2ca02c"; }

inline void render_panel(std::string& out, const Scene& scene, const Viewport& vp) {
    out += "<g class=\"scene\">\n";
    if (!scene.title.empty()) {
        out += "<text class=\"title\" x=\"" + fmt(vp.offset_x + 8.0) + "\" y=\"18\" font-size=\"14\">" + xml_escape(scene.title) +
               "</text>\n";
    }
    for (const auto& c : scene.contours) {
        out += "<path class=\"contour\" d=\"" + contour_path(c, vp) + "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    }
    if (!scene.path.empty()) {
        out += "<polyline class=\"trajectory\" points=\"";
        for (std::size_t i = 0; i < scene.path.size(); ++i) {
            if (i > 0) out += ' ';
            out += fmt(vp.sx(scene.path[i].x)) + "," + fmt(vp.sy(scene.path[i].y));
        }
        out += "\" fill=\"none\" stroke=\"#8e44ad\" stroke-dasharray=\"4 3\"/>\n";
    }
    auto at = [&](int v) { return scene.points.at(static_cast<std::size_t>(v - 1)); };
    for (const auto& t : scene.triangles) {
        if (t.vertices.size() != 3) continue;
        out += "<polygon class=\"triangle " + std::string(to_string(t.color)) + "\" points=\"";
        for (std::size_t j = 0; j < 3; ++j) {
            if (j > 0) out += ' ';
            const Point2 p = at(t.vertices[j]);
            out += fmt(vp.sx(p.x)) + "," + fmt(vp.sy(p.y));
        }
        out += "\" fill=\"" + std::string(stroke(t.color)) + "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
    }
    if (scene.graph && static_cast<std::size_t>(scene.graph->n()) == scene.points.size()) {
        const auto& g = *scene.graph;
        for (int i = 1; i <= g.n(); ++i) {
            for (int k = i + 1; k <= g.n(); ++k) {
                const Point2 a = at(i);
                const Point2 b = at(k);
                out += "<line class=\"edge " + std::string(to_string(g.color(i, k))) + "\" x1=\"" + fmt(vp.sx(a.x)) +
                       "\" y1=\"" + fmt(vp.sy(a.y)) + "\" x2=\"" + fmt(vp.sx(b.x)) + "\" y2=\"" + fmt(vp.sy(b.y)) +
                       "\" stroke=\"" + stroke(g.color(i, k)) + "\" stroke-width=\"1.5\"/>\n";
            }
        }
    }
    for (std::size_t i = 0; i < scene.points.size(); ++i) {
        const Point2 p = scene.points[i];
        out += "<circle class=\"point\" cx=\"" + fmt(vp.sx(p.x)) + "\" cy=\"" + fmt(vp.sy(p.y)) +
               "\" r=\"4\" fill=\"#1f77b4\"/>\n";
        out += "<text class=\"label\" x=\"" + fmt(vp.sx(p.x) + 6.0) + "\" y=\"" + fmt(vp.sy(p.y) - 6.0) +
               "\" font-size=\"12\">" + std::to_string(i + 1) + "</text>\n";
    }
    out += "</g>\n";
}

}  // namespace detail

/// Scenes are laid out left to right in square panels.
inline std::string render_svg(std::span<const Scene> scenes, double panel = 400.0) {
    const double width = panel * static_cast<double>(std::max<std::size_t>(1, scenes.size()));
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      detail::fmt(width) + "\" height=\"" + detail::fmt(panel) + "\" viewBox=\"0 0 " +
                      detail::fmt(width) + " " + detail::fmt(panel) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    for (std::size_t s = 0; s < scenes.size(); ++s) {
        const auto vp = detail::fit(scenes[s], panel * static_cast<double>(s), panel, 30.0);
        detail::render_panel(out, scenes[s], vp);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace ramsey_loops
