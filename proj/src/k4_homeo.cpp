#include "geodetic/k4_homeo.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace geodetic {

SegmentDecomposition decompose_segments(const Graph& g) {
    SegmentDecomposition out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 3) out.nodes.push_back(v);
    }
    if (out.nodes.empty()) throw std::domain_error("graph has no vertex of degree >= 3");

    std::set<Edge> used;
    auto take = [&used](VertexId a, VertexId b) { return used.insert(std::minmax(a, b)).second; };
    for (VertexId start : out.nodes) {
        for (VertexId first : g.neighbors(start)) {
            if (!take(start, first)) continue;
            std::vector<VertexId> segment{start, first};
            VertexId prev = start;
            VertexId at = first;
            while (g.degree(at) == 2) {
                const auto nbrs = g.neighbors(at);
                const VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                take(at, next);
                segment.push_back(next);
                prev = at;
                at = next;
                if (at == start) break;
            }
            out.segments.push_back(std::move(segment));
        }
    }
    return out;
}

namespace {

struct K4Layout {
    std::array<VertexId, 4> nodes{};
    // seg_len[a][b] for node indices a != b.
    std::array<std::array<std::size_t, 4>, 4> seg_len{};
};

std::optional<K4Layout> k4_layout(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
    SegmentDecomposition dec;
    try {
        dec = decompose_segments(g);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    if (dec.nodes.size() != 4 || dec.segments.size() != 6) return std::nullopt;
    K4Layout layout;
    std::copy(dec.nodes.begin(), dec.nodes.end(), layout.nodes.begin());
    auto index_of = [&](VertexId v) -> std::optional<std::size_t> {
        const auto it = std::find(layout.nodes.begin(), layout.nodes.end(), v);
        if (it == layout.nodes.end()) return std::nullopt;
        return static_cast<std::size_t>(it - layout.nodes.begin());
    };
    for (VertexId v : dec.nodes) {
        if (g.degree(v) != 3) return std::nullopt;
    }
    std::size_t total = 0;
    for (const auto& seg : dec.segments) {
        const auto a = index_of(seg.front());
        const auto b = index_of(seg.back());
        if (!a || !b || *a == *b || layout.seg_len[*a][*b] != 0) return std::nullopt;
        layout.seg_len[*a][*b] = layout.seg_len[*b][*a] = SegmentDecomposition::length(seg);
        total += SegmentDecomposition::length(seg);
    }
    if (total != g.edge_count()) return std::nullopt;
    return layout;
}

}  // namespace

bool is_homeomorphic_to_k4(const Graph& g) { return k4_layout(g).has_value(); }

Theorem1Report theorem1_check(const Graph& g) {
    Theorem1Report report;
    const auto layout = k4_layout(g);
    if (!layout) return report;
    report.is_k4_homeomorph = true;
    const auto& len = layout->seg_len;

    report.cond_segments_are_geodesics = true;
    for (std::size_t a = 0; a < 4; ++a) {
        const auto dist = bfs_distances(g, layout->nodes[a]);
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (*dist.dist[layout->nodes[b]] != len[a][b]) report.cond_segments_are_geodesics = false;
        }
    }

    // Triangle avoiding node `skip`.
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::array<std::size_t, 3> t{};
        for (std::size_t k = 0, i = 0; k < 4; ++k) {
            if (k != skip) t[i++] = k;
        }
        report.three_segment_cycle_lengths.push_back(len[t[0]][t[1]] + len[t[1]][t[2]] + len[t[0]][t[2]]);
    }
    // Hamiltonian cycle avoiding the matching {0,m} {p,q}.
    for (std::size_t m = 1; m < 4; ++m) {
        std::array<std::size_t, 2> rest{};
        for (std::size_t k = 1, i = 0; k < 4; ++k) {
            if (k != m) rest[i++] = k;
        }
        std::size_t total = 0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) total += len[a][b];
        report.four_segment_cycle_lengths.push_back(total - len[0][m] - len[rest[0]][rest[1]]);
    }

    const auto& three = report.three_segment_cycle_lengths;
    const auto& four = report.four_segment_cycle_lengths;
    report.cond_three_segment_cycles_odd = std::all_of(three.begin(), three.end(), [](std::size_t l) { return l % 2 == 1; });
    report.cond_four_segment_cycles_equal = std::adjacent_find(four.begin(), four.end(), std::not_equal_to<>()) == four.end();
    report.verdict_geodetic =
        report.cond_segments_are_geodesics && report.cond_three_segment_cycles_odd && report.cond_four_segment_cycles_equal;
    return report;
}

}  // namespace geodetic
