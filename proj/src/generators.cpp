#include "geodetic/generators.hpp"

#include <stdexcept>
#include <vector>

namespace geodetic::generators {

Graph cycle(std::size_t length) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < length; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % length));
    return Graph(length, edges);
}

Graph path(std::size_t edges) {
    std::vector<Edge> list;
    for (VertexId i = 0; i < edges; ++i) list.emplace_back(i, i + 1);
    return Graph(edges + 1, list);
}

Graph complete(std::size_t vertices) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < vertices; ++u)
        for (VertexId v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
    return Graph(vertices, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, edges);
}

Graph subdivided_k4(const std::array<std::size_t, 6>& lengths) {
    static constexpr std::array<Edge, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    std::vector<Edge> edges;
    VertexId next = 4;
    for (std::size_t k = 0; k < kEdges.size(); ++k) {
        if (lengths[k] == 0) throw std::invalid_argument("segment length must be positive");
        VertexId prev = kEdges[k].first;
        for (std::size_t step = 1; step < lengths[k]; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, kEdges[k].second);
    }
    return Graph(next, edges);
}

}  // namespace geodetic::generators
