#pragma once

#include <optional>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

struct SegmentDecomposition {
    /// Vertices of degree >= 3, ascending.
    std::vector<VertexId> nodes;
    /// Maximal paths through degree-2 vertices. Each starts at a node; it
    /// ends at a node unless it runs into a degree-1 vertex.
    std::vector<std::vector<VertexId>> segments;

    static std::size_t length(const std::vector<VertexId>& segment) { return segment.size() - 1; }
};

/// Throws std::domain_error when g has no node.
SegmentDecomposition decompose_segments(const Graph& g);

bool is_homeomorphic_to_k4(const Graph& g);

struct Theorem1Report {
    bool is_k4_homeomorph = false;
    bool cond_segments_are_geodesics = false;
    bool cond_three_segment_cycles_odd = false;
    bool cond_four_segment_cycles_equal = false;
    /// Present only for K_4 homeomorphs.
    std::optional<bool> verdict_geodetic;

    std::vector<std::size_t> three_segment_cycle_lengths;  ///< one per omitted node
    std::vector<std::size_t> four_segment_cycle_lengths;   ///< one per pair of opposite segments
};

Theorem1Report theorem1_check(const Graph& g);

}  // namespace geodetic
