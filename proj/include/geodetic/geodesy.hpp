#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

using PathCount = std::uint64_t;

/// Distance and shortest-path multiplicity for every ordered vertex pair.
class GeodesicProfile {
public:
    GeodesicProfile(std::size_t n, std::vector<std::uint32_t> dist, std::vector<PathCount> count);

    std::size_t vertex_count() const noexcept { return n_; }
    std::uint32_t distance(VertexId u, VertexId v) const { return dist_[u * n_ + v]; }
    PathCount count(VertexId u, VertexId v) const { return count_[u * n_ + v]; }

    /// Largest count over all pairs (1 for graphs with fewer than two vertices).
    PathCount k_value() const noexcept { return k_value_; }

    /// Lexicographically first pair u < v attaining k_value; absent when the
    /// graph has fewer than two vertices.
    std::optional<Edge> witness_pair() const noexcept { return witness_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> dist_;
    std::vector<PathCount> count_;
    PathCount k_value_ = 1;
    std::optional<Edge> witness_;
};

/// Per-source BFS with path multiplicities accumulated along edges that
/// step one level further from the source. Throws std::domain_error naming
/// an unreachable pair if `g` is disconnected and std::overflow_error if a
/// count does not fit in PathCount.
GeodesicProfile count_geodesics(const Graph& g);

enum class GeodeticKind { Geodetic, Bigeodetic, Trigeodetic, KGeodetic };

struct GeodeticClass {
    GeodeticKind kind = GeodeticKind::Geodetic;
    PathCount k = 1;

    friend bool operator==(const GeodeticClass&, const GeodeticClass&) = default;
};

GeodeticClass classify_k(const GeodesicProfile& profile);
GeodeticClass class_for_k(PathCount k);

/// "GEODETIC", "BIGEODETIC", "TRIGEODETIC" or "KGEODETIC".
std::string to_string(GeodeticKind kind);
/// e.g. "BIGEODETIC (K=2)".
std::string to_string(const GeodeticClass& c);

struct GeodesicPaths {
    std::vector<std::vector<VertexId>> paths;
    bool truncated = false;  ///< more than `cap` geodesics exist
};

/// Every shortest u-v path as a vertex sequence, in lexicographic order,
/// stopping after `cap` paths.
GeodesicPaths enumerate_geodesics(const Graph& g, VertexId u, VertexId v, std::size_t cap);

}  // namespace geodetic
