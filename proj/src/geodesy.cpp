#include "geodetic/geodesy.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace geodetic {

GeodesicProfile::GeodesicProfile(std::size_t n, std::vector<std::uint32_t> dist, std::vector<PathCount> count)
    : n_(n), dist_(std::move(dist)), count_(std::move(count)) {
    for (VertexId u = 0; u < n_; ++u) {
        for (VertexId v = u + 1; v < n_; ++v) {
            if (!witness_ || this->count(u, v) > k_value_) {
                k_value_ = this->count(u, v);
                witness_ = Edge{u, v};
            }
        }
    }
}

GeodesicProfile count_geodesics(const Graph& g) {
    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> dist(n * n, kUnseen);
    std::vector<PathCount> count(n * n, 0);

    std::vector<VertexId> order;
    order.reserve(n);
    for (VertexId s = 0; s < n; ++s) {
        auto* d = dist.data() + s * n;
        auto* sigma = count.data() + s * n;
        d[s] = 0;
        sigma[s] = 1;
        order.clear();
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const VertexId u = order[head];
            for (VertexId w : g.neighbors(u)) {
                if (d[w] == kUnseen) {
                    d[w] = d[u] + 1;
                    order.push_back(w);
                }
                if (d[w] == d[u] + 1 && __builtin_add_overflow(sigma[w], sigma[u], &sigma[w])) {
                    throw std::overflow_error("geodesic count overflow from source " + std::to_string(s));
                }
            }
        }
        if (order.size() != n) {
            for (VertexId v = 0; v < n; ++v) {
                if (d[v] == kUnseen) {
                    throw std::domain_error("graph is disconnected: no path between " + std::to_string(s) +
                                            " and " + std::to_string(v));
                }
            }
        }
    }
    return GeodesicProfile(n, std::move(dist), std::move(count));
}

GeodeticClass class_for_k(PathCount k) {
    switch (k) {
        case 0:
        case 1: return {GeodeticKind::Geodetic, 1};
        case 2: return {GeodeticKind::Bigeodetic, 2};
        case 3: return {GeodeticKind::Trigeodetic, 3};
        default: return {GeodeticKind::KGeodetic, k};
    }
}

GeodeticClass classify_k(const GeodesicProfile& profile) { return class_for_k(profile.k_value()); }

std::string to_string(GeodeticKind kind) {
    switch (kind) {
        case GeodeticKind::Geodetic: return "GEODETIC";
        case GeodeticKind::Bigeodetic: return "BIGEODETIC";
        case GeodeticKind::Trigeodetic: return "TRIGEODETIC";
        case GeodeticKind::KGeodetic: return "KGEODETIC";
    }
    return "UNKNOWN";
}

std::string to_string(const GeodeticClass& c) {
    return to_string(c.kind) + " (K=" + std::to_string(c.k) + ")";
}

namespace {

struct GeodesicWalker {
    const Graph& g;
    const DistanceTable& from_u;
    const DistanceTable& from_v;
    std::size_t cap;
    GeodesicPaths& out;
    std::vector<VertexId> current;

    // Returns false once the cap is hit.
    bool walk(VertexId at) {
        if (*from_v.dist[at] == 0) {
            if (out.paths.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.paths.push_back(current);
            return true;
        }
        for (VertexId w : g.neighbors(at)) {
            if (*from_u.dist[w] == *from_u.dist[at] + 1 && *from_v.dist[w] + 1 == *from_v.dist[at]) {
                current.push_back(w);
                const bool more = walk(w);
                current.pop_back();
                if (!more) return false;
            }
        }
        return true;
    }
};

}  // namespace

GeodesicPaths enumerate_geodesics(const Graph& g, VertexId u, VertexId v, std::size_t cap) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw std::domain_error("vertex out of range");
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    const auto from_u = bfs_distances(g, u);
    const auto from_v = bfs_distances(g, v);
    if (!from_u.dist[v]) {
        throw std::domain_error("no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    GeodesicPaths out;
    GeodesicWalker walker{g, from_u, from_v, cap, out, {u}};
    walker.walk(u);
    return out;
}

}  // namespace geodetic
