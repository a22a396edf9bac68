#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geodetic/cycles.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

/// Parameters of an even cycle of length 2L carrying n pairwise crossing
/// chords. Nodes x_1..x_{2n} sit clockwise on the cycle; arcs[k] is the gap
/// from x_{k+1} to x_{k+2} (0-based storage) and chord i joins x_i to
/// x_{n+i} with chords[i] edges.
struct EmbeddedSpec {
    int L = 0;
    int n = 0;
    std::vector<int> arcs;
    std::vector<int> chords;

    friend bool operator==(const EmbeddedSpec&, const EmbeddedSpec&) = default;
};

/// `L=3 n=2 arcs=1,2,2,1 chords=2,1`
EmbeddedSpec parse_spec_line(std::string_view line, std::size_t line_no = 1);
/// One spec per non-blank, non-'#' line.
std::vector<EmbeddedSpec> parse_spec_lines(std::string_view text);
std::string format_spec(const EmbeddedSpec& spec);

struct SpecViolation {
    std::string field;
    std::string message;
};

struct SpecVerdict {
    std::vector<SpecViolation> violations;
    /// Per chord: shorter than both arcs between its endpoints. Empty when
    /// the spec's shape is too broken to evaluate chords.
    std::vector<bool> chord_valid;

    bool ok() const noexcept { return violations.empty(); }
    std::string describe() const;
};

/// Reports every problem found, not just the first.
SpecVerdict validate_spec(const EmbeddedSpec& spec);

class InvalidSpec : public std::domain_error {
public:
    explicit InvalidSpec(SpecVerdict verdict);
    const SpecVerdict& verdict() const noexcept { return verdict_; }

private:
    SpecVerdict verdict_;
};

struct EmbeddedGraph {
    EmbeddedSpec spec;
    Graph graph;
    CycleView cycle;
    /// node_positions[k] is the vertex of x_{k+1}.
    std::vector<VertexId> node_positions;
    /// chord_paths[i] runs from x_{i+1} to x_{n+i+1}.
    std::vector<std::vector<VertexId>> chord_paths;
};

/// Cycle vertices are 0..2L-1 clockwise with x_1 = 0; internal chord
/// vertices follow, chord by chord, ordered from x_i toward x_{n+i}.
/// Throws InvalidSpec when validate_spec fails.
EmbeddedGraph build(const EmbeddedSpec& spec);

struct ChordParity {
    int forward_cycle = 0;   ///< chord + clockwise arc x_i -> x_{n+i}
    int backward_cycle = 0;  ///< chord + clockwise arc x_{n+i} -> x_i

    bool odd() const noexcept { return forward_cycle % 2 == 1 && backward_cycle % 2 == 1; }
};

struct Condition1Report {
    std::vector<ChordParity> chords;
    bool holds = false;
};

struct Condition2Report {
    /// |C_1^2|, |C_2^3|, ..., |C_n^1|
    std::vector<int> cycle_lengths;
    bool holds = false;
};

struct EmbeddednessReport {
    bool holds = false;
    std::optional<CycleView> violating_cycle;
    std::string violation;  ///< which chord/arc combination formed it
};

struct ConditionReport {
    std::vector<bool> chord_validity;
    EmbeddednessReport embeddedness;
    Condition1Report condition1;
    Condition2Report condition2;
    std::optional<GeodeticClass> predicted_class;

    bool conditions_hold() const noexcept { return condition1.holds && condition2.holds && embeddedness.holds; }
};

Condition1Report check_condition1(const EmbeddedGraph& h);
Condition2Report check_condition2(const EmbeddedGraph& h);
EmbeddednessReport check_embeddedness(const EmbeddedGraph& h);

/// Arithmetic-only version of the three checks, usable before building.
bool conditions_hold(const EmbeddedSpec& spec);

/// All checks plus the predicted class.
ConditionReport evaluate(const EmbeddedGraph& h);

/// Geodetic for n = 2, bigeodetic for n >= 3, nothing when any check fails.
std::optional<GeodeticClass> predict_class(const ConditionReport& report, const EmbeddedSpec& spec);

}  // namespace geodetic
