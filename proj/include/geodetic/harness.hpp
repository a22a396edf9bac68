#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geodetic/cycles.hpp"
#include "geodetic/embedded.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

struct SweepBounds {
    int L_max = 2;
    /// Also sweep chord-valid specs that fail condition 1 or 2.
    bool include_invalid = false;
};

struct EnumeratedSpec {
    EmbeddedSpec spec;
    bool conditions_hold = false;
};

/// Every spec with 2 <= L <= L_max, 2 <= n <= L, arcs a composition of 2L
/// into 2n parts and chords in [1, L-1]^n that passes validate_spec. Order:
/// L, n, arcs lexicographic, chords lexicographic. Without include_invalid
/// only specs satisfying both conditions are produced.
/// Throws std::invalid_argument when L_max < 2.
std::vector<EnumeratedSpec> enumerate_specs(const SweepBounds& bounds);
void for_each_spec(const SweepBounds& bounds, const std::function<void(const EnumeratedSpec&)>& visit);

/// A vertex pair on C that breaks "unique geodesic, and shorter than L for
/// C-opposite pairs".
struct PairViolation {
    VertexId u = 0;
    VertexId v = 0;
    std::uint32_t distance = 0;
    PathCount count = 0;
    bool opposite = false;

    friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

struct SweepFinding {
    EmbeddedSpec spec;
    ConditionReport report;
    GeodeticClass oracle_class;
    std::optional<Edge> oracle_witness;
    bool pair_property_holds = false;
    bool agrees_with_paper = true;
    /// Which claim failed, one line each.
    std::vector<std::string> disagreements;
    /// Up to kMaxReportedViolations offending pairs on C.
    std::vector<PairViolation> violations;

    static constexpr std::size_t kMaxReportedViolations = 8;
};

/// Checks the cycle-pair property on a built graph. Fills `violations`
/// (capped) and returns whether every pair on C is fine.
bool pair_property(const EmbeddedGraph& h, const GeodesicProfile& profile, std::vector<PairViolation>* violations);

SweepFinding validate_one(const EmbeddedSpec& spec);

struct SweepSummary {
    std::size_t specs = 0;
    std::size_t conditions_hold = 0;
    std::size_t geodetic = 0;
    std::size_t bigeodetic = 0;
    std::size_t higher = 0;
    std::size_t disagreements = 0;
};

struct SweepOptions {
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
    std::size_t chunk = 512;
};

/// Streams findings in enumeration order regardless of thread count.
SweepSummary sweep_validate(const SweepBounds& bounds, const SweepOptions& options,
                            const std::function<void(const SweepFinding&)>& sink);
std::vector<SweepFinding> sweep_validate(const SweepBounds& bounds);

struct ChordSearchLimits {
    std::size_t max_paths_per_pair = 64;
    std::size_t max_combinations = 2'000'000;
    /// Longest cycle enumerated when looking for minimal even cycles; 0
    /// means the vertex count.
    std::size_t max_cycle_len = 0;
    std::size_t max_cycles = 256;
};

/// A chord system found inside a host graph. host_map[v] is the host vertex
/// playing the role of vertex v of `embedded.graph`.
struct ChordSystem {
    EmbeddedGraph embedded;
    std::vector<VertexId> host_map;
};

struct ChordSearchResult {
    std::optional<ChordSystem> system;
    /// Every candidate path and every chord subset was examined.
    bool search_exhausted = false;
    std::size_t candidate_paths = 0;
    std::size_t combinations = 0;
};

/// Looks for n >= 2 pairwise crossing, vertex-disjoint chords of `c` in `g`
/// (interiors off C, each shorter than both arcs) whose embedded graph
/// satisfies both conditions. Throws std::invalid_argument if `c` is odd or
/// not a cycle of g.
ChordSearchResult find_chord_system(const Graph& g, const CycleView& c, const ChordSearchLimits& limits);

struct Corollary4Verdict {
    CycleView minimal_even_cycle;
    std::optional<ChordSystem> chord_system_found;
    bool certified_nongeodetic = false;
    bool search_exhausted = false;
};

struct Corollary4Report {
    std::optional<std::size_t> minimal_even_length;
    std::vector<Corollary4Verdict> verdicts;
    /// More minimal even cycles exist than max_cycles allowed.
    bool cycles_truncated = false;
    bool certified_nongeodetic = false;
    GeodeticClass oracle_class;
    /// certified implies oracle K >= 2.
    bool sound = true;
};

Corollary4Report corollary4_check(const Graph& g, const ChordSearchLimits& limits);

}  // namespace geodetic
