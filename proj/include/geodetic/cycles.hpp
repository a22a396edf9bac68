#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

/// A simple cycle v_0 v_1 ... v_{m-1} (closing back to v_0).
class CycleView {
public:
    /// Rotates and reflects `vertices` into canonical form: start at the
    /// smallest id and continue toward the smaller of its two cycle
    /// neighbours. Throws std::invalid_argument for fewer than 3 vertices
    /// or repeated vertices.
    explicit CycleView(std::vector<VertexId> vertices);

    /// Same, but also checks that consecutive vertices are adjacent in `g`.
    static CycleView in_graph(const Graph& g, std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size(); }
    bool is_even() const noexcept { return vertices_.size() % 2 == 0; }
    VertexId at(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    /// Position of `v` on the cycle, if present.
    std::optional<std::size_t> position(VertexId v) const;

    /// Edges along the shorter walk between positions i and j.
    std::size_t arc_distance(std::size_t i, std::size_t j) const;

    friend bool operator==(const CycleView&, const CycleView&) = default;
    /// Orders by length, then lexicographically.
    friend bool operator<(const CycleView& a, const CycleView& b);

private:
    std::vector<VertexId> vertices_;
};

struct OppositePair {
    VertexId u;
    VertexId v;
    std::size_t arc_length;

    friend bool operator==(const OppositePair&, const OppositePair&) = default;
};

/// Every simple cycle of length <= max_len, once each, sorted by length and
/// then lexicographically by canonical vertex sequence.
std::vector<CycleView> enumerate_cycles(const Graph& g, std::size_t max_len);

struct MinimalEvenCycles {
    std::optional<std::size_t> length;
    std::vector<CycleView> cycles;
};

MinimalEvenCycles minimal_even_cycles(const Graph& g, std::size_t max_len);

/// Pairs (v_i, v_{i+m/2}) for i < m/2. Throws std::domain_error on odd cycles.
std::vector<OppositePair> c_opposite_pairs(const CycleView& c);

struct Lemma1Verdict {
    /// First even cycle whose opposite pairs all sit at distance |C|/2 in g.
    std::optional<CycleView> nongeodetic_witness;
    std::size_t scanned_max_length = 0;
    /// max_len reached the vertex count, so no witness means geodetic.
    bool exhaustive = false;
};

Lemma1Verdict lemma1_scan(const Graph& g, std::size_t max_len);

}  // namespace geodetic
