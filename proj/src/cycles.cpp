#include "geodetic/cycles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geodetic {

CycleView::CycleView(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    const std::size_t m = vertices_.size();
    if (m < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("cycle repeats a vertex");
    }
    const auto min_it = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), min_it, vertices_.end());
    if (vertices_.back() < vertices_[1]) std::reverse(vertices_.begin() + 1, vertices_.end());
}

CycleView CycleView::in_graph(const Graph& g, std::vector<VertexId> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VertexId a = vertices[i];
        const VertexId b = vertices[(i + 1) % vertices.size()];
        if (!g.has_edge(a, b)) {
            throw std::invalid_argument("cycle step " + std::to_string(a) + "-" + std::to_string(b) +
                                        " is not an edge");
        }
    }
    return CycleView(std::move(vertices));
}

std::optional<std::size_t> CycleView::position(VertexId v) const {
    const auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t CycleView::arc_distance(std::size_t i, std::size_t j) const {
    const std::size_t m = length();
    const std::size_t forward = (j + m - i % m) % m;
    return std::min(forward, m - forward);
}

bool operator<(const CycleView& a, const CycleView& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices_ < b.vertices_;
}

namespace {

class CycleCollector {
public:
    CycleCollector(const Graph& g, std::size_t max_len) : g_(g), max_len_(max_len), on_path_(g.vertex_count()) {}

    std::vector<CycleView> run() {
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            root_ = s;
            path_ = {s};
            on_path_[s] = true;
            extend(s);
            on_path_[s] = false;
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void extend(VertexId at) {
        for (VertexId w : g_.neighbors(at)) {
            if (w == root_) {
                // Each cycle is seen twice, once per direction; keep the
                // direction whose second vertex is the smaller neighbour.
                if (path_.size() >= 3 && path_[1] < path_.back()) found_.emplace_back(path_);
                continue;
            }
            if (w < root_ || on_path_[w] || path_.size() >= max_len_) continue;
            on_path_[w] = true;
            path_.push_back(w);
            extend(w);
            path_.pop_back();
            on_path_[w] = false;
        }
    }

    const Graph& g_;
    std::size_t max_len_;
    std::vector<bool> on_path_;
    std::vector<VertexId> path_;
    VertexId root_ = 0;
    std::vector<CycleView> found_;
};

}  // namespace

std::vector<CycleView> enumerate_cycles(const Graph& g, std::size_t max_len) {
    if (max_len < 3) throw std::invalid_argument("max_len must be at least 3");
    return CycleCollector(g, max_len).run();
}

MinimalEvenCycles minimal_even_cycles(const Graph& g, std::size_t max_len) {
    if (max_len < 4) throw std::invalid_argument("max_len must be at least 4");
    MinimalEvenCycles out;
    for (auto& c : enumerate_cycles(g, max_len)) {
        if (!c.is_even()) continue;
        if (out.length && c.length() > *out.length) break;
        out.length = c.length();
        out.cycles.push_back(std::move(c));
    }
    return out;
}

std::vector<OppositePair> c_opposite_pairs(const CycleView& c) {
    if (!c.is_even()) throw std::domain_error("opposite pairs need an even cycle");
    const std::size_t half = c.length() / 2;
    std::vector<OppositePair> pairs;
    pairs.reserve(half);
    for (std::size_t i = 0; i < half; ++i) pairs.push_back({c.at(i), c.at(i + half), half});
    return pairs;
}

Lemma1Verdict lemma1_scan(const Graph& g, std::size_t max_len) {
    if (max_len < 4) throw std::invalid_argument("max_len must be at least 4");
    if (!is_connected(g)) throw std::domain_error("lemma1_scan needs a connected graph");
    Lemma1Verdict verdict;
    verdict.scanned_max_length = max_len;
    verdict.exhaustive = max_len >= g.vertex_count();
    const DistanceMatrix dist(g);
    for (auto& c : enumerate_cycles(g, max_len)) {
        if (!c.is_even()) continue;
        const auto pairs = c_opposite_pairs(c);
        const bool all_far = std::all_of(pairs.begin(), pairs.end(),
                                         [&](const OppositePair& p) { return dist(p.u, p.v) == p.arc_length; });
        if (all_far) {
            verdict.nongeodetic_witness = std::move(c);
            break;
        }
    }
    return verdict;
}

}  // namespace geodetic
