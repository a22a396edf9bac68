#pragma once

// Brute-force reference implementations. These deliberately avoid BFS and
// the library's cycle walker so they can check them independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic::testing {

struct PairPaths {
    std::size_t min_length = std::numeric_limits<std::size_t>::max();
    std::uint64_t count = 0;
};

/// Walks every simple path out of each source and keeps, per target, the
/// minimum length and how many simple paths attain it.
inline std::vector<PairPaths> exhaustive_shortest_paths(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<PairPaths> table(n * n);
    std::vector<bool> used(n);
    for (VertexId s = 0; s < n; ++s) {
        std::function<void(VertexId, std::size_t)> dfs = [&](VertexId at, std::size_t len) {
            auto& cell = table[s * n + at];
            if (len < cell.min_length) cell = {len, 1};
            else if (len == cell.min_length) ++cell.count;
            for (VertexId w : g.neighbors(at)) {
                if (used[w]) continue;
                used[w] = true;
                dfs(w, len + 1);
                used[w] = false;
            }
        };
        used[s] = true;
        dfs(s, 0);
        used[s] = false;
    }
    return table;
}

/// Every simple cycle up to max_len, keyed by the lexicographically
/// smallest of its 2m rotations and reflections. Tries all vertex orders.
inline std::set<std::vector<VertexId>> brute_force_cycles(const Graph& g, std::size_t max_len) {
    std::set<std::vector<VertexId>> out;
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> seq;
    std::vector<bool> used(n);
    auto canonical = [](std::vector<VertexId> c) {
        std::vector<VertexId> best = c;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t r = 0; r < c.size(); ++r) {
                std::rotate(c.begin(), c.begin() + 1, c.end());
                best = std::min(best, c);
            }
            std::reverse(c.begin(), c.end());
        }
        return best;
    };
    std::function<void()> grow = [&] {
        if (seq.size() >= 3 && g.has_edge(seq.back(), seq.front())) out.insert(canonical(seq));
        if (seq.size() == max_len) return;
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || (!seq.empty() && !g.has_edge(seq.back(), w))) continue;
            used[w] = true;
            seq.push_back(w);
            grow();
            seq.pop_back();
            used[w] = false;
        }
    };
    grow();
    return out;
}

/// Connected graphs for property checks: every connected labelled graph on
/// 1..5 vertices, then `random_count` random connected graphs on 6 or 7
/// vertices from a fixed seed.
inline std::vector<Graph> small_graph_corpus(std::size_t random_count = 400) {
    std::vector<Graph> corpus;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Edge> slots;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (mask & (1u << k)) edges.push_back(slots[k]);
            Graph g(n, edges);
            if (is_connected(g)) corpus.push_back(std::move(g));
        }
    }
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::size_t added = 0;
    while (added < random_count) {
        const std::size_t n = 6 + added % 2;
        const double p = density(rng);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        corpus.push_back(std::move(g));
        ++added;
    }
    return corpus;
}

}  // namespace geodetic::testing
