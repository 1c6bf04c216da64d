#pragma once

// JSON encodings of contours, point sets, arrangements, graphs, trajectories
// and verdicts. Requires nlohmann/json.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ramsey_loops/billiard.hpp"
#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/error.hpp"
#include "ramsey_loops/ramsey.hpp"
#include "ramsey_loops/regions.hpp"
#include "ramsey_loops/render.hpp"

namespace ramsey_loops::io {

using json = nlohmann::json;

inline json point_to_json(const Point2& p) { return json::array({p.x, p.y}); }

inline Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::InvalidArgument, "expected a point [x, y], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline std::string orientation_text(Orientation o) { return o == Orientation::CCW ? "ccw" : "cw"; }

inline Orientation orientation_from_text(const std::string& s) {
    if (s == "ccw") return Orientation::CCW;
    if (s == "cw") return Orientation::CW;
    throw Error(ErrorCode::InvalidArgument, "orientation must be \"ccw\" or \"cw\", got \"" + s + "\"");
}

inline json contour_to_json(const Contour& c) {
    json j;
    if (c.is_circle()) {
        j["type"] = "circle";
        j["center"] = point_to_json(c.as_circle().center);
        j["radius"] = c.as_circle().radius;
    } else {
        j["type"] = c.is_polyline() ? "polyline" : "parametric_samples";
        json verts = json::array();
        for (const auto& p : c.vertices()) verts.push_back(point_to_json(p));
        j["vertices"] = std::move(verts);
    }
    j["orientation"] = orientation_text(c.orientation());
    return j;
}

/// Circles default to "ccw". For vertex lists the orientation comes from the
/// vertex order; an explicit "orientation" must agree with it.
inline Contour contour_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw Error(ErrorCode::InvalidArgument, "contour must be an object with a string \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    std::optional<Orientation> declared;
    if (j.contains("orientation")) {
        if (!j["orientation"].is_string()) throw Error(ErrorCode::InvalidArgument, "\"orientation\" must be a string");
        declared = orientation_from_text(j["orientation"].get<std::string>());
    }
    if (type == "circle") {
        if (!j.contains("center") || !j.contains("radius") || !j["radius"].is_number()) {
            throw Error(ErrorCode::InvalidArgument, "circle needs \"center\" and numeric \"radius\"");
        }
        return Contour::circle(point_from_json(j["center"]), j["radius"].get<double>(),
                               declared.value_or(Orientation::CCW));
    }
    if (type == "polyline" || type == "parametric_samples") {
        if (!j.contains("vertices") || !j["vertices"].is_array()) {
            throw Error(ErrorCode::InvalidArgument, type + " needs a \"vertices\" array");
        }
        std::vector<Point2> verts;
        for (const auto& p : j["vertices"]) verts.push_back(point_from_json(p));
        return type == "polyline" ? Contour::polyline(std::move(verts), declared)
                                  : Contour::sampled(std::move(verts), std::nullopt, declared);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown contour type \"" + type + "\"");
}

inline json points_to_json(std::span<const LabeledPoint> points) {
    const auto pos = detail::positions_by_index(points);
    json arr = json::array();
    for (const auto& p : pos) arr.push_back(point_to_json(p));
    return json{{"points", std::move(arr)}};
}

/// {"points": [[x,y], ...]}, indexed 1..n in file order.
inline std::vector<LabeledPoint> points_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
        throw Error(ErrorCode::InvalidArgument, "points file needs a \"points\" array");
    }
    std::vector<LabeledPoint> out;
    int index = 1;
    for (const auto& p : j["points"]) out.push_back({index++, point_from_json(p), {}});
    return out;
}

inline json arrangement_to_json(const Arrangement& a) {
    json curves = json::array();
    for (const auto& c : a.curves()) curves.push_back(contour_to_json(c));
    json j{{"curves", std::move(curves)}};
    if (!a.names().empty()) j["names"] = std::vector<std::string>(a.names().begin(), a.names().end());
    return j;
}

inline Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array()) {
        throw Error(ErrorCode::InvalidArgument, "arrangement needs a \"curves\" array");
    }
    std::vector<Contour> curves;
    for (const auto& c : j["curves"]) curves.push_back(contour_from_json(c));
    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j["names"].is_array()) throw Error(ErrorCode::InvalidArgument, "\"names\" must be an array");
        for (const auto& n : j["names"]) {
            if (!n.is_string()) throw Error(ErrorCode::InvalidArgument, "curve names must be strings");
            names.push_back(n.get<std::string>());
        }
    }
    return Arrangement(std::move(curves), std::move(names));
}

inline json graph_to_json(const ColoredCompleteGraph& g) {
    json edges = json::array();
    for (int i = 1; i <= g.n(); ++i) {
        for (int k = i + 1; k <= g.n(); ++k) {
            json e{{"i", i}, {"k", k}, {"color", std::string(to_string(g.color(i, k)))}};
            const auto& prov = g.provenance(i, k);
            if (const auto* line = std::get_if<ChordLine>(&prov)) {
                e["alpha"] = line->alpha;
                e["beta"] = line->beta;
            } else if (const auto* labels = std::get_if<LabelPair>(&prov)) {
                e["labels"] = json::array({labels->first, labels->second});
            }
            edges.push_back(std::move(e));
        }
    }
    json j{{"n", g.n()}, {"edges", std::move(edges)}};
    if (g.jitter_seed) j["jitter_seed"] = *g.jitter_seed;
    return j;
}

inline EdgeColor color_from_text(const std::string& s) {
    if (s == "red") return EdgeColor::Red;
    if (s == "green") return EdgeColor::Green;
    throw Error(ErrorCode::InvalidArgument, "edge color must be \"red\" or \"green\", got \"" + s + "\"");
}

/// Reads the graph format back; every one of the C(n,2) edges must appear once.
inline ColoredCompleteGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") ||
        !j["edges"].is_array()) {
        throw Error(ErrorCode::InvalidArgument, "graph needs integer \"n\" and an \"edges\" array");
    }
    const int n = j["n"].get<int>();
    ColoredCompleteGraph g(n);
    std::vector<bool> seen(pair_count(n), false);
    for (const auto& e : j["edges"]) {
        const int i = e.at("i").get<int>();
        const int k = e.at("k").get<int>();
        g.set_color(i, k, color_from_text(e.at("color").get<std::string>()));
        if (e.contains("alpha") && e.contains("beta")) {
            g.set_provenance(i, k, ChordLine{std::min(i, k), std::max(i, k), e["alpha"].get<double>(),
                                             e["beta"].get<double>()});
        } else if (e.contains("labels")) {
            g.set_provenance(i, k, LabelPair{e["labels"].at(0).get<std::string>(), e["labels"].at(1).get<std::string>()});
        }
        auto idx = edge_index(n, i, k);
        if (seen[idx]) throw Error(ErrorCode::InvalidArgument, "edge listed twice");
        seen[idx] = true;
    }
    for (bool s : seen) {
        if (!s) throw Error(ErrorCode::InvalidArgument, "graph is missing edges");
    }
    if (j.contains("jitter_seed")) g.jitter_seed = j["jitter_seed"].get<std::uint64_t>();
    return g;
}

inline json cliques_to_json(const std::vector<MonochromaticClique>& cliques) {
    json arr = json::array();
    for (const auto& c : cliques) arr.push_back({{"vertices", c.vertices}, {"color", std::string(to_string(c.color))}});
    return arr;
}

inline std::vector<MonochromaticClique> cliques_from_json(const json& arr) {
    std::vector<MonochromaticClique> out;
    for (const auto& c : arr) {
        out.push_back({c.at("vertices").get<std::vector<int>>(), color_from_text(c.at("color").get<std::string>())});
    }
    return out;
}

inline json state_to_json(const ParticleState& s) {
    return {{"position", point_to_json(s.position)}, {"direction", point_to_json(s.direction)}};
}

inline json trajectory_to_json(const Trajectory& t) {
    json refl = json::array();
    for (const auto& r : t.reflections) refl.push_back(point_to_json(r.position));
    return {{"boundary", contour_to_json(t.boundary)},
            {"start", state_to_json(t.start)},
            {"reflections", std::move(refl)},
            {"termination", std::string(to_string(t.termination))}};
}

/// Verdict sidecar: {"n", "claim", "holds", "counterexamples", "witness"?}.
inline json verdict_to_json(const RamseyVerdict& v) {
    json j{{"n", v.n}, {"claim", "r33"}, {"holds", v.all_colorings_contain_triangle},
           {"counterexamples", v.counterexample_count}, {"colorings_checked", v.colorings_checked}};
    if (v.sample_counterexample) j["witness"] = coloring_bits_text(v.n, *v.sample_counterexample);
    return j;
}

inline std::string labeling_bits_text(int n, std::uint64_t labels) {
    std::string s;
    for (int v = 0; v < n; ++v) s.push_back(((labels >> v) & 1U) ? '1' : '0');
    return s;
}

inline json verdict_to_json(const TransitiveRamseyVerdict& v) {
    json j{{"n", v.n},
           {"claim", "trans"},
           {"holds", v.no_red_triangle_ever && v.every_assignment_has_green_triangle_or_red_path2},
           {"counterexamples", v.red_triangle_labelings + v.uncovered_labelings},
           {"no_red_triangle_ever", v.no_red_triangle_ever},
           {"every_assignment_has_green_triangle_or_red_path2", v.every_assignment_has_green_triangle_or_red_path2},
           {"labelings_checked", v.labelings_checked}};
    if (v.first_uncovered) j["witness"] = labeling_bits_text(v.n, *v.first_uncovered);
    return j;
}

inline json verdict_to_json(const MultipartiteVerdict& v) {
    json j{{"n", v.n},
           {"claim", "multipartite"},
           {"holds", v.holds},
           {"counterexamples", v.counterexample_count},
           {"max_part_size", v.max_part_size},
           {"partitions_checked", v.partitions_checked}};
    if (v.witness) j["witness"] = partition_text(*v.witness);
    return j;
}

/// A scenario result: the graph format at top level plus "triangles",
/// "points", "contours", optional "path" and "metadata".
inline json result_to_json(const ColoredCompleteGraph& graph, const std::vector<MonochromaticClique>& triangles,
                           std::span<const LabeledPoint> points, std::span<const Contour> contours,
                           const json& metadata, std::span<const Point2> path = {}) {
    json j = graph_to_json(graph);
    j["triangles"] = cliques_to_json(triangles);
    j["points"] = points_to_json(points)["points"];
    json cs = json::array();
    for (const auto& c : contours) cs.push_back(contour_to_json(c));
    j["contours"] = std::move(cs);
    if (!path.empty()) {
        json p = json::array();
        for (const auto& q : path) p.push_back(point_to_json(q));
        j["path"] = std::move(p);
    }
    j["metadata"] = metadata;
    return j;
}

inline Scene scene_from_result(const json& j, std::string title = {}) {
    Scene scene;
    scene.title = std::move(title);
    if (j.contains("contours")) {
        for (const auto& c : j["contours"]) scene.contours.push_back(contour_from_json(c));
    }
    if (j.contains("points")) {
        for (const auto& p : j["points"]) scene.points.push_back(point_from_json(p));
    }
    if (j.contains("path")) {
        for (const auto& p : j["path"]) scene.path.push_back(point_from_json(p));
    }
    if (j.contains("edges")) scene.graph = graph_from_json(j);
    if (j.contains("triangles")) scene.triangles = cliques_from_json(j["triangles"]);
    for (const auto& t : scene.triangles) {
        for (int v : t.vertices) {
            if (v < 1 || static_cast<std::size_t>(v) > scene.points.size()) {
                throw Error(ErrorCode::InvalidArgument, "triangle refers to a missing point");
            }
        }
    }
    return scene;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace ramsey_loops::io
