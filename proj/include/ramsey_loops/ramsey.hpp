#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/error.hpp"

namespace ramsey_loops {

struct MonochromaticClique {
    std::vector<int> vertices;  // sorted ascending
    EdgeColor color = EdgeColor::Red;

    friend bool operator==(const MonochromaticClique&, const MonochromaticClique&) = default;
    friend auto operator<=>(const MonochromaticClique& a, const MonochromaticClique& b) {
        if (auto c = a.vertices <=> b.vertices; c != 0) return c;
        return a.color <=> b.color;
    }
};

/// Every vertex subset of `size` whose induced edges all share one color,
/// sorted lexicographically by vertex list.
inline std::vector<MonochromaticClique> find_monochromatic_cliques(const ColoredCompleteGraph& graph, int size) {
    const int n = graph.n();
    if (size < 2 || size > n) {
        throw Error(ErrorCode::InvalidArgument,
                    "clique size " + std::to_string(size) + " outside [2, " + std::to_string(n) + "]");
    }
    std::vector<MonochromaticClique> out;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(size));

    // candidates: vertices above current.back() joined in `color` to all of current
    auto extend = [&](auto&& self, EdgeColor color, const std::vector<int>& candidates) -> void {
        if (static_cast<int>(current.size()) == size) {
            out.push_back({current, color});
            return;
        }
        const auto needed = static_cast<std::size_t>(size) - current.size();
        for (std::size_t c = 0; c + needed <= candidates.size(); ++c) {
            const int v = candidates[c];
            std::vector<int> next;
            for (std::size_t d = c + 1; d < candidates.size(); ++d) {
                if (graph.color(v, candidates[d]) == color) next.push_back(candidates[d]);
            }
            current.push_back(v);
            self(self, color, next);
            current.pop_back();
        }
    };

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    for (EdgeColor color : {EdgeColor::Red, EdgeColor::Green}) extend(extend, color, all);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<MonochromaticClique> find_monochromatic_triangles(const ColoredCompleteGraph& graph) {
    if (graph.n() < 3) return {};
    return find_monochromatic_cliques(graph, 3);
}

/// Early-exit existence check; `only` restricts the search to one color.
inline bool has_monochromatic_triangle(const ColoredCompleteGraph& graph, std::optional<EdgeColor> only = {}) {
    const int n = graph.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const EdgeColor c = graph.color(a, b);
            if (only && c != *only) continue;
            for (int d = b + 1; d <= n; ++d) {
                if (graph.color(a, d) == c && graph.color(b, d) == c) return true;
            }
        }
    }
    return false;
}

/// A two-coloring of K_n packed as C(n,2) bits in edge-lexicographic order;
/// a set bit means Red.
using ColoringBits = std::uint64_t;

inline ColoredCompleteGraph coloring_from_bits(int n, ColoringBits bits) {
    ColoredCompleteGraph g(n);
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            const bool red = (bits >> edge_index(n, i, k)) & 1U;
            g.set_color(i, k, red ? EdgeColor::Red : EdgeColor::Green);
        }
    }
    return g;
}

/// '1' for Red, '0' for Green, edge-lexicographic order.
inline std::string coloring_bits_text(int n, ColoringBits bits) {
    std::string s;
    for (std::size_t e = 0; e < pair_count(n); ++e) s.push_back(((bits >> e) & 1U) ? '1' : '0');
    return s;
}

struct RamseyVerdict {
    int n = 0;
    bool all_colorings_contain_triangle = false;
    std::uint64_t counterexample_count = 0;
    std::uint64_t colorings_checked = 0;
    /// Lowest-numbered triangle-free coloring.
    std::optional<ColoringBits> sample_counterexample;
};

inline constexpr int kMaxR33Vertices = 7;

/// Enumerates all 2^C(n,2) two-colorings of K_n and counts those without a
/// monochromatic triangle. The sweep may be split across `threads` workers;
/// counts and the reported counterexample do not depend on the split.
inline RamseyVerdict verify_r33(int n, unsigned threads = 1) {
    if (n < 2 || n > kMaxR33Vertices) {
        throw Error(ErrorCode::InvalidArgument,
                    "R(3,3) sweep supports 2 <= n <= " + std::to_string(kMaxR33Vertices));
    }
    std::vector<ColoringBits> triangle_masks;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                triangle_masks.push_back((ColoringBits{1} << edge_index(n, a, b)) |
                                         (ColoringBits{1} << edge_index(n, a, c)) |
                                         (ColoringBits{1} << edge_index(n, b, c)));
            }
        }
    }
    const ColoringBits total = ColoringBits{1} << pair_count(n);

    struct Partial {
        std::uint64_t count = 0;
        std::optional<ColoringBits> first;
    };
    auto sweep = [&triangle_masks](ColoringBits begin, ColoringBits end) {
        Partial p;
        for (ColoringBits bits = begin; bits < end; ++bits) {
            const bool mono = std::any_of(triangle_masks.begin(), triangle_masks.end(), [bits](ColoringBits m) {
                const ColoringBits hit = bits & m;
                return hit == 0 || hit == m;
            });
            if (!mono) {
                if (!p.first) p.first = bits;
                ++p.count;
            }
        }
        return p;
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    std::vector<Partial> partials(workers);
    if (workers == 1) {
        partials[0] = sweep(0, total);
    } else {
        std::vector<std::jthread> pool;
        const ColoringBits chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const ColoringBits begin = std::min(total, chunk * w);
            const ColoringBits end = std::min(total, begin + chunk);
            pool.emplace_back([&, w, begin, end] { partials[w] = sweep(begin, end); });
        }
    }

    RamseyVerdict v;
    v.n = n;
    v.colorings_checked = total;
    for (const auto& p : partials) {  // chunks are in ascending order
        v.counterexample_count += p.count;
        if (!v.sample_counterexample && p.first) v.sample_counterexample = p.first;
    }
    v.all_colorings_contain_triangle = v.counterexample_count == 0;
    return v;
}

struct TransitiveRamseyVerdict {
    int n = 0;
    bool every_assignment_has_green_triangle_or_red_path2 = false;
    bool no_red_triangle_ever = false;
    std::uint64_t labelings_checked = 0;
    std::uint64_t red_triangle_labelings = 0;
    /// Labelings with neither a Green triangle nor a two-edge Red path.
    std::uint64_t uncovered_labelings = 0;
    /// Lowest-numbered uncovered labeling; bit v-1 is the label of vertex v.
    std::optional<std::uint64_t> first_uncovered;
};

inline constexpr int kMaxTransitiveVertices = 20;

/// Sweeps all 2^n two-valued vertex labelings and inspects the equality
/// coloring each one induces.
inline TransitiveRamseyVerdict verify_transitive_ramsey(int n) {
    if (n < 2 || n > kMaxTransitiveVertices) {
        throw Error(ErrorCode::InvalidArgument,
                    "transitive sweep supports 2 <= n <= " + std::to_string(kMaxTransitiveVertices));
    }
    using Mask = std::uint32_t;
    const Mask everyone = (Mask{1} << n) - 1;
    TransitiveRamseyVerdict v;
    v.n = n;

    // triangle in the graph given by per-vertex neighbour masks
    auto has_triangle = [n](const std::vector<Mask>& adj) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (((adj[a] >> b) & 1U) && (adj[a] & adj[b] & ~((Mask{2} << b) - 1))) return true;
            }
        }
        return false;
    };

    std::vector<Mask> green(static_cast<std::size_t>(n));
    std::vector<Mask> red(static_cast<std::size_t>(n));
    for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << n); ++labels) {
        const Mask ones = static_cast<Mask>(labels);
        for (int a = 0; a < n; ++a) {
            const Mask same = ((ones >> a) & 1U) ? ones : (everyone & ~ones);
            green[a] = same & ~(Mask{1} << a);
            red[a] = everyone & ~same;
        }
        ++v.labelings_checked;
        if (has_triangle(red)) ++v.red_triangle_labelings;
        const bool red_path2 = std::any_of(red.begin(), red.end(), [](Mask m) { return std::popcount(m) >= 2; });
        if (!(red_path2 || has_triangle(green))) {
            if (!v.first_uncovered) v.first_uncovered = labels;
            ++v.uncovered_labelings;
        }
    }
    v.no_red_triangle_ever = v.red_triangle_labelings == 0;
    v.every_assignment_has_green_triangle_or_red_path2 = v.uncovered_labelings == 0;
    return v;
}

using Partition = std::vector<std::vector<int>>;

inline std::string partition_text(const Partition& parts) {
    std::string s;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (p > 0) s += ',';
        s += '{';
        for (std::size_t j = 0; j < parts[p].size(); ++j) {
            if (j > 0) s += ',';
            s += std::to_string(parts[p][j]);
        }
        s += '}';
    }
    return s;
}

struct MultipartiteVerdict {
    int n = 0;
    int max_part_size = 0;
    bool holds = false;
    std::uint64_t partitions_checked = 0;
    std::uint64_t counterexample_count = 0;
    /// First partition (restricted-growth order) without a Red triangle.
    std::optional<Partition> witness;
};

inline constexpr int kMaxMultipartiteVertices = 12;

/// Checks that every partition of vertices 1..n into parts of at most
/// `max_part_size` vertices yields an equality coloring with a Red triangle.
inline MultipartiteVerdict verify_multipartite_red_triangle(int n, int max_part_size) {
    if (n < 3 || n > kMaxMultipartiteVertices || max_part_size < 1) {
        throw Error(ErrorCode::InvalidArgument, "multipartite sweep needs 3 <= n <= " +
                                                    std::to_string(kMaxMultipartiteVertices) + " and max_part_size >= 1");
    }
    MultipartiteVerdict v;
    v.n = n;
    v.max_part_size = max_part_size;

    // restricted growth string: block[0] = 0, block[i] <= 1 + max(block[0..i-1])
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<int> sizes(static_cast<std::size_t>(n), 0);
        bool fits = true;
        for (int b : block) fits = fits && ++sizes[static_cast<std::size_t>(b)] <= max_part_size;
        if (fits) {
            VertexLabeling labeling;
            for (int b : block) labeling.labels.push_back(std::to_string(b));
            ++v.partitions_checked;
            if (!has_monochromatic_triangle(color_by_labels(labeling), EdgeColor::Red)) {
                ++v.counterexample_count;
                if (!v.witness) {
                    Partition parts(static_cast<std::size_t>(prefix_max.back() + 1));
                    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(block[i])].push_back(i + 1);
                    v.witness = std::move(parts);
                }
            }
        }
        int i = n - 1;
        while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++block[i];
        prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
        for (int j = i + 1; j < n; ++j) {
            block[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    v.holds = v.counterexample_count == 0;
    return v;
}

}  // namespace ramsey_loops
