// ramsey-loops: command-line front end for the slope, curvature and region
// colorings, the billiard simulator and the exhaustive verifiers.
//
// Exit codes: 0 success / claim holds, 1 input error, 2 degenerate geometry,
// 3 claim fails.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey_loops/io.hpp"
#include "ramsey_loops/ramsey_loops.hpp"

namespace rl = ramsey_loops;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitClaimFails = 3;

int exit_code_for(rl::ErrorCode code) {
    switch (code) {
        case rl::ErrorCode::DegenerateSlope:
        case rl::ErrorCode::CoincidentPoints:
        case rl::ErrorCode::ZeroLengthEdge:
        case rl::ErrorCode::CornerHit:
        case rl::ErrorCode::Grazing:
        case rl::ErrorCode::NoIntersection:
        case rl::ErrorCode::OnBoundary:
        case rl::ErrorCode::WindingResidual:
            return kExitDegenerate;
        default:
            return kExitInput;
    }
}

struct SlopeFlags {
    std::string policy = "reject";
    std::uint64_t seed = rl::kDefaultJitterSeed;
    double eps_slope = 1e-12;
    double eps_vert = 1e-12;
    double jitter = 1e-9;

    void attach(CLI::App* cmd) {
        cmd->add_option("--policy", policy, "Degenerate-chord policy")
            ->check(CLI::IsMember({"reject", "perturb"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Jitter seed")->capture_default_str();
        cmd->add_option("--eps-slope", eps_slope, "Relative zero-slope tolerance")->capture_default_str();
        cmd->add_option("--eps-vert", eps_vert, "Relative vertical-chord tolerance")->capture_default_str();
        cmd->add_option("--jitter", jitter, "Relative jitter half-width")->capture_default_str();
    }

    [[nodiscard]] rl::SlopeOptions options() const {
        return {policy == "perturb" ? rl::DegeneracyPolicy::Perturb : rl::DegeneracyPolicy::Reject, eps_slope,
                eps_vert, jitter, seed};
    }

    [[nodiscard]] json metadata() const {
        return {{"policy", policy},
                {"seed", seed},
                {"tolerances", {{"eps_slope", eps_slope}, {"eps_vert", eps_vert}, {"jitter", jitter}}}};
    }
};

void emit(const std::string& out, const json& j) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << '\n';
    } else {
        rl::io::write_json_file(out, j);
    }
}

/// 0 unless n >= 6 and no monochromatic triangle was found.
int triangle_exit(const rl::ColoredCompleteGraph& g, const std::vector<rl::MonochromaticClique>& triangles) {
    return (g.n() >= 6 && triangles.empty()) ? kExitClaimFails : kExitOk;
}

std::vector<double> evenly_spaced(int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(static_cast<double>(i) / count);
    return out;
}

int run_slope_graph(const std::string& contour_file, const std::vector<double>& params, const std::string& points_file,
                    const SlopeFlags& flags, const std::string& out) {
    std::vector<rl::Contour> contours;
    std::vector<rl::LabeledPoint> points;
    json meta{{"command", "slope-graph"}};
    if (!contour_file.empty()) {
        contours.push_back(rl::io::contour_from_json(rl::io::read_json_file(contour_file)));
        meta["contour_file"] = contour_file;
    }
    if (!points_file.empty()) {
        points = rl::io::points_from_json(rl::io::read_json_file(points_file));
        meta["points_file"] = points_file;
    } else {
        if (contours.empty() || params.empty()) {
            throw rl::Error(rl::ErrorCode::InvalidArgument, "give --points, or --contour with --params");
        }
        points = rl::sample_points(contours.front(), params);
        meta["params"] = params;
    }
    meta.update(flags.metadata());
    const auto graph = rl::color_by_slope(points, flags.options());
    const auto triangles = rl::find_monochromatic_triangles(graph);
    emit(out, rl::io::result_to_json(graph, triangles, points, contours, meta));
    return triangle_exit(graph, triangles);
}

struct BilliardFlags {
    std::string boundary_file;
    std::vector<double> position;
    std::vector<double> direction;
    int bounces = 6;
    std::string corner_mode = "error";
    double noise = 0.0;
    std::uint64_t noise_seed = 0;
    double min_advance = 1e-9;
    double eps_corner = 1e-9;
    double eps_graze = 1e-9;
    std::string trajectory_out;
};

int run_billiard(const BilliardFlags& b, const SlopeFlags& flags, const std::string& out) {
    const rl::Contour boundary = rl::io::contour_from_json(rl::io::read_json_file(b.boundary_file));
    const rl::Vec2 raw{b.direction.at(0), b.direction.at(1)};
    if (!rl::is_finite(raw) || rl::norm(raw) == 0.0) {
        throw rl::Error(rl::ErrorCode::InvalidArgument, "direction must be a nonzero finite vector");
    }
    const rl::ParticleState start{{b.position.at(0), b.position.at(1)}, rl::normalized(raw)};
    rl::BilliardOptions opt;
    opt.min_advance = b.min_advance;
    opt.corner = b.eps_corner;
    opt.graze = b.eps_graze;
    opt.corner_mode = b.corner_mode == "bisector" ? rl::CornerMode::Bisector : rl::CornerMode::Error;
    opt.noise_bound = b.noise;
    opt.noise_seed = b.noise_seed;

    const rl::Trajectory traj = rl::simulate(boundary, start, b.bounces, opt);
    if (!b.trajectory_out.empty()) rl::io::write_json_file(b.trajectory_out, rl::io::trajectory_to_json(traj));
    if (traj.termination != rl::Termination::Completed) {
        std::cerr << "billiard stopped after " << traj.reflections.size() << " reflections: " << traj.message << '\n';
        return kExitDegenerate;
    }

    json meta{{"command", "billiard"},
              {"boundary_file", b.boundary_file},
              {"start", rl::io::state_to_json(start)},
              {"bounces", b.bounces},
              {"corner_mode", b.corner_mode},
              {"noise", b.noise},
              {"noise_seed", b.noise_seed},
              {"termination", std::string(rl::to_string(traj.termination))}};
    meta.update(flags.metadata());
    meta["tolerances"].update(
        {{"min_advance", b.min_advance}, {"eps_corner", b.eps_corner}, {"eps_graze", b.eps_graze}});

    const auto graph = rl::reflections_to_graph(traj, flags.options());
    const auto triangles = rl::find_monochromatic_triangles(graph);
    std::vector<rl::Point2> path{start.position};
    for (const auto& r : traj.reflections) path.push_back(r.position);
    const std::vector<rl::Contour> contours{boundary};
    emit(out, rl::io::result_to_json(graph, triangles, traj.reflections, contours, meta, path));
    return triangle_exit(graph, triangles);
}

int run_regions_graph(const std::string& arrangement_file, const std::string& points_file, double eps_region,
                      const std::string& out) {
    const rl::Arrangement arrangement = rl::io::arrangement_from_json(rl::io::read_json_file(arrangement_file));
    const auto points = rl::io::points_from_json(rl::io::read_json_file(points_file));
    const auto graph = rl::region_graph(arrangement, points, eps_region);
    const auto triangles = rl::find_monochromatic_triangles(graph);
    const json meta{{"command", "regions-graph"},
                    {"arrangement_file", arrangement_file},
                    {"points_file", points_file},
                    {"tolerances", {{"eps_region", eps_region}}}};
    const std::vector<rl::Contour> contours(arrangement.curves().begin(), arrangement.curves().end());
    emit(out, rl::io::result_to_json(graph, triangles, points, contours, meta));
    return triangle_exit(graph, triangles);
}

int run_curvature(const std::string& contour_file, std::vector<double> params, std::optional<double> y_prime,
                  std::optional<double> y_double_prime, const std::string& out) {
    if (y_prime || y_double_prime) {
        if (!y_prime || !y_double_prime) {
            throw rl::Error(rl::ErrorCode::InvalidArgument, "graph form needs both --yp and --ypp");
        }
        emit(out, {{"y_prime", *y_prime},
                   {"y_double_prime", *y_double_prime},
                   {"kappa", rl::signed_curvature_graph(*y_prime, *y_double_prime)}});
        return kExitOk;
    }
    if (contour_file.empty()) throw rl::Error(rl::ErrorCode::InvalidArgument, "give --contour or --yp/--ypp");
    const rl::Contour contour = rl::io::contour_from_json(rl::io::read_json_file(contour_file));

    std::vector<rl::LabeledPoint> points;
    std::vector<double> kappas;
    json samples = json::array();
    if (contour.is_circle()) {
        if (params.empty()) params = evenly_spaced(8);
        points = rl::sample_points(contour, params);
        for (const auto& p : points) kappas.push_back(rl::signed_curvature_parametric(contour, *p.curve_param).kappa);
    } else {
        const auto v = contour.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            points.push_back({static_cast<int>(i) + 1, v[i], {}});
            kappas.push_back(rl::discrete_curvature(contour, i));
        }
    }
    const rl::VertexLabeling signs = rl::label_by_curvature_sign(kappas);
    for (std::size_t i = 0; i < points.size(); ++i) {
        json s{{"index", points[i].index},
               {"x", points[i].position.x},
               {"y", points[i].position.y},
               {"kappa", kappas[i]},
               {"sign", signs.labels[i]}};
        if (points[i].curve_param) s["param"] = *points[i].curve_param;
        samples.push_back(std::move(s));
    }
    const auto graph = rl::color_by_labels(signs);
    const auto triangles = rl::find_monochromatic_triangles(graph);
    const std::vector<rl::Contour> contours{contour};
    json result = rl::io::result_to_json(graph, triangles, points, contours,
                                         {{"command", "curvature"}, {"contour_file", contour_file}});
    result["samples"] = std::move(samples);
    emit(out, result);
    return kExitOk;
}

int run_verify(const std::string& claim, int n, int max_part, unsigned threads, const std::string& out) {
    json verdict;
    bool holds = false;
    if (claim == "r33") {
        const auto v = rl::verify_r33(n, threads);
        verdict = rl::io::verdict_to_json(v);
        holds = v.all_colorings_contain_triangle;
    } else if (claim == "trans") {
        const auto v = rl::verify_transitive_ramsey(n);
        verdict = rl::io::verdict_to_json(v);
        holds = verdict["holds"].get<bool>();
    } else {
        const auto v = rl::verify_multipartite_red_triangle(n, max_part);
        verdict = rl::io::verdict_to_json(v);
        holds = v.holds;
    }
    emit(out, verdict);
    return holds ? kExitOk : kExitClaimFails;
}

int run_render(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<rl::Scene> scenes;
    for (const auto& path : inputs) {
        const json j = rl::io::read_json_file(path);
        std::string title = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
        scenes.push_back(rl::io::scene_from_result(j, title));
    }
    const std::string svg = rl::render_svg(scenes);
    if (out.empty() || out == "-") {
        std::cout << svg;
        return kExitOk;
    }
    std::ofstream file(out);
    if (!file) throw rl::Error(rl::ErrorCode::InvalidArgument, "cannot write " + out);
    file << svg;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey colorings on closed plane curves, billiards and exhaustive verifiers"};
    app.require_subcommand(1);
    std::string out;

    auto* slope = app.add_subcommand("slope-graph", "Color chords between points by slope sign");
    std::string contour_file;
    std::string points_file;
    std::vector<double> params;
    SlopeFlags slope_flags;
    slope->add_option("--contour", contour_file, "Contour file");
    slope->add_option("--params", params, "Comma-separated arc-length parameters in [0,1)")->delimiter(',');
    slope->add_option("--points", points_file, "Points file");
    slope_flags.attach(slope);
    slope->add_option("--out", out, "Result file (default stdout)");

    auto* billiard = app.add_subcommand("billiard", "Simulate a billiard and color its reflection points");
    BilliardFlags bflags;
    SlopeFlags billiard_slope;
    billiard->add_option("--boundary", bflags.boundary_file, "Boundary contour file")->required();
    billiard->add_option("--position", bflags.position, "Start position x,y")->delimiter(',')->expected(2)->required();
    billiard->add_option("--direction", bflags.direction, "Start direction dx,dy (normalized)")
        ->delimiter(',')
        ->expected(2)
        ->required();
    billiard->add_option("--bounces", bflags.bounces, "Number of reflections")->capture_default_str();
    billiard->add_option("--corner-mode", bflags.corner_mode, "Polyline vertex hits")
        ->check(CLI::IsMember({"error", "bisector"}))
        ->capture_default_str();
    billiard->add_option("--noise", bflags.noise, "Max angular reflection noise (radians)")->capture_default_str();
    billiard->add_option("--noise-seed", bflags.noise_seed, "Reflection noise seed")->capture_default_str();
    billiard->add_option("--eps-advance", bflags.min_advance, "Minimum ray advance")->capture_default_str();
    billiard->add_option("--eps-corner", bflags.eps_corner, "Vertex proximity for corner hits")->capture_default_str();
    billiard->add_option("--eps-graze", bflags.eps_graze, "Tangency threshold")->capture_default_str();
    billiard->add_option("--trajectory-out", bflags.trajectory_out, "Trajectory file");
    billiard_slope.attach(billiard);
    billiard->add_option("--out", out, "Result file (default stdout)");

    auto* regions = app.add_subcommand("regions-graph", "Color points by Jordan-region membership");
    std::string arrangement_file;
    std::string region_points_file;
    double eps_region = rl::kRegionTolerance;
    regions->add_option("--arrangement", arrangement_file, "Arrangement file")->required();
    regions->add_option("--points", region_points_file, "Points file")->required();
    regions->add_option("--eps-region", eps_region, "Boundary rejection distance")->capture_default_str();
    regions->add_option("--out", out, "Result file (default stdout)");

    auto* curvature = app.add_subcommand("curvature", "Signed curvature samples and the sign-equality graph");
    std::string curvature_contour;
    std::vector<double> curvature_params;
    std::optional<double> y_prime;
    std::optional<double> y_double_prime;
    curvature->add_option("--contour", curvature_contour, "Contour file");
    curvature->add_option("--params", curvature_params, "Circle parameters in [0,1)")->delimiter(',');
    curvature->add_option("--yp", y_prime, "Graph form: y'");
    curvature->add_option("--ypp", y_double_prime, "Graph form: y''");
    curvature->add_option("--out", out, "Result file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Exhaustively check a Ramsey claim");
    std::string claim;
    int n = 6;
    int max_part = 2;
    unsigned threads = 1;
    verify->add_option("--claim", claim, "Claim to check")
        ->check(CLI::IsMember({"r33", "trans", "multipartite"}))
        ->required();
    verify->add_option("--n", n, "Number of vertices")->capture_default_str();
    verify->add_option("--max-part", max_part, "Largest region size (multipartite)")->capture_default_str();
    verify->add_option("--threads", threads, "Worker threads for the r33 sweep")->capture_default_str();
    verify->add_option("--out", out, "Verdict file (default stdout)");

    auto* render = app.add_subcommand("render", "Draw result files as SVG");
    std::vector<std::string> inputs;
    render->add_option("inputs", inputs, "Result files")->required();
    render->add_option("--out", out, "SVG file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*slope) return run_slope_graph(contour_file, params, points_file, slope_flags, out);
        if (*billiard) return run_billiard(bflags, billiard_slope, out);
        if (*regions) return run_regions_graph(arrangement_file, region_points_file, eps_region, out);
        if (*curvature) return run_curvature(curvature_contour, curvature_params, y_prime, y_double_prime, out);
        if (*verify) return run_verify(claim, n, max_part, threads, out);
        if (*render) return run_render(inputs, out);
    } catch (const rl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
