#include "geodetic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

namespace geodetic {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u == v) {
            throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop on vertex " +
                                        std::to_string(u));
        }
        if (u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge " + std::to_string(i) + ": endpoint out of range");
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    std::size_t total = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        total += nbrs.size();
    }
    edge_count_ = total / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph from_edge_list(std::span<const Edge> edges) {
    std::size_t n = 0;
    for (const auto& [u, v] : edges) n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    return Graph(n, edges);
}

namespace {

std::optional<VertexId> parse_vertex(std::string_view token) {
    VertexId value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty()) throw ParseError(line_no, "expected two vertex ids");
        if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
        const auto u = parse_vertex(a);
        const auto v = parse_vertex(b);
        if (!u || !v) throw ParseError(line_no, "vertex ids must be non-negative integers");
        if (*u == *v) throw ParseError(line_no, "self-loop on vertex " + a);
        edges.emplace_back(*u, *v);
    }
    return from_edge_list(edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

DistanceTable bfs_distances(const Graph& g, VertexId source) {
    if (source >= g.vertex_count()) {
        throw std::domain_error("bfs source " + std::to_string(source) + " out of range");
    }
    DistanceTable table{source, std::vector<std::optional<std::uint32_t>>(g.vertex_count())};
    table.dist[source] = 0;
    std::queue<VertexId> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const VertexId u = frontier.front();
        frontier.pop();
        for (VertexId w : g.neighbors(u)) {
            if (!table.dist[w]) {
                table.dist[w] = *table.dist[u] + 1;
                frontier.push(w);
            }
        }
    }
    return table;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto table = bfs_distances(g, 0);
    return std::all_of(table.dist.begin(), table.dist.end(), [](const auto& d) { return d.has_value(); });
}

std::uint32_t diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw std::domain_error("diameter of an empty graph");
    std::uint32_t best = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        for (const auto& d : bfs_distances(g, s).dist) {
            if (!d) throw std::domain_error("diameter of a disconnected graph");
            best = std::max(best, *d);
        }
    }
    return best;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()), data_(n_ * n_) {
    for (VertexId s = 0; s < n_; ++s) {
        const auto table = bfs_distances(g, s);
        for (VertexId v = 0; v < n_; ++v) {
            if (!table.dist[v]) throw std::domain_error("distance matrix of a disconnected graph");
            data_[s * n_ + v] = *table.dist[v];
        }
    }
}

}  // namespace geodetic
