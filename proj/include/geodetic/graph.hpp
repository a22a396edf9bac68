#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geodetic {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Thrown by the text readers; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph over dense vertex ids [0, vertex_count).
///
/// Immutable once built. Neighbor lists are kept sorted so every traversal
/// in the library visits vertices in a fixed order.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with exactly `vertex_count` vertices. Duplicate edges
    /// collapse; a self-loop or an out-of-range endpoint throws
    /// std::invalid_argument naming the offending edge index.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Vertex count is 1 + the largest endpoint, or 0 for no edges.
Graph from_edge_list(std::span<const Edge> edges);

/// Parses the edge-list text format: two non-negative integers per line,
/// '#' comment lines and blank lines skipped.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

std::string to_edge_list(const Graph& g);

/// Distances from a single source. Unreachable vertices hold std::nullopt.
struct DistanceTable {
    VertexId source = 0;
    std::vector<std::optional<std::uint32_t>> dist;
};

DistanceTable bfs_distances(const Graph& g, VertexId source);

bool is_connected(const Graph& g);

/// Throws std::domain_error for disconnected or empty graphs.
std::uint32_t diameter(const Graph& g);

/// All-pairs distance matrix for a connected graph, row-major.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    std::uint32_t operator()(VertexId u, VertexId v) const { return data_[u * n_ + v]; }
    std::size_t size() const noexcept { return n_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> data_;
};

}  // namespace geodetic
