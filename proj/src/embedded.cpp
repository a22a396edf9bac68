#include "geodetic/embedded.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace geodetic {

namespace {

std::vector<int> parse_csv_ints(std::string_view text, std::size_t line_no, const std::string& key) {
    std::vector<int> values;
    if (text.empty()) throw ParseError(line_no, key + " is empty");
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(line_no, key + ": bad integer '" + std::string(token) + "'");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

int parse_int(std::string_view text, std::size_t line_no, const std::string& key) {
    const auto values = parse_csv_ints(text, line_no, key);
    if (values.size() != 1) throw ParseError(line_no, key + " expects a single integer");
    return values.front();
}

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

// Clockwise offsets of x_1..x_{2n}.
std::vector<int> node_offsets(const EmbeddedSpec& spec) {
    std::vector<int> pos(spec.arcs.size());
    std::exclusive_scan(spec.arcs.begin(), spec.arcs.end(), pos.begin(), 0);
    return pos;
}

// Chord i's clockwise arc from x_i to x_{n+i}.
int forward_arc(const EmbeddedSpec& spec, int i) {
    return std::accumulate(spec.arcs.begin() + i, spec.arcs.begin() + spec.n + i, 0);
}

ChordParity parity_of(const EmbeddedSpec& spec, int i) {
    const int forward = forward_arc(spec, i);
    return {spec.chords[i] + forward, spec.chords[i] + 2 * spec.L - forward};
}

// |C_i^{i+1}| with the last one wrapping to chord 0.
int adjacent_cycle_length(const EmbeddedSpec& spec, int i) {
    const int j = (i + 1) % spec.n;
    return spec.arcs[i] + spec.chords[i] + spec.chords[j] + spec.arcs[spec.n + i];
}

}  // namespace

EmbeddedSpec parse_spec_line(std::string_view line, std::size_t line_no) {
    EmbeddedSpec spec;
    bool seen_L = false, seen_n = false, seen_arcs = false, seen_chords = false;
    std::istringstream fields{std::string(line)};
    std::string field;
    while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string_view value = std::string_view(field).substr(eq + 1);
        bool* seen = nullptr;
        if (key == "L") {
            spec.L = parse_int(value, line_no, key);
            seen = &seen_L;
        } else if (key == "n") {
            spec.n = parse_int(value, line_no, key);
            seen = &seen_n;
        } else if (key == "arcs") {
            spec.arcs = parse_csv_ints(value, line_no, key);
            seen = &seen_arcs;
        } else if (key == "chords") {
            spec.chords = parse_csv_ints(value, line_no, key);
            seen = &seen_chords;
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
        if (*seen) throw ParseError(line_no, "duplicate key '" + key + "'");
        *seen = true;
    }
    if (!seen_L || !seen_n || !seen_arcs || !seen_chords) {
        throw ParseError(line_no, "spec needs L, n, arcs and chords");
    }
    return spec;
}

std::vector<EmbeddedSpec> parse_spec_lines(std::string_view text) {
    std::vector<EmbeddedSpec> specs;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        specs.push_back(parse_spec_line(line, line_no));
    }
    return specs;
}

std::string format_spec(const EmbeddedSpec& spec) {
    return "L=" + std::to_string(spec.L) + " n=" + std::to_string(spec.n) + " arcs=" + join(spec.arcs) +
           " chords=" + join(spec.chords);
}

std::string SpecVerdict::describe() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.field + ": " + v.message;
    }
    return out.empty() ? "valid" : out;
}

SpecVerdict validate_spec(const EmbeddedSpec& spec) {
    SpecVerdict verdict;
    auto fail = [&](std::string field, std::string message) {
        verdict.violations.push_back({std::move(field), std::move(message)});
    };
    if (spec.L < 2) fail("L", "must be at least 2, got " + std::to_string(spec.L));
    if (spec.n < 2 || spec.n > spec.L) {
        fail("n", "must satisfy 2 <= n <= L, got n=" + std::to_string(spec.n));
    }
    const bool arcs_sized = spec.n >= 1 && spec.arcs.size() == static_cast<std::size_t>(2 * spec.n);
    const bool chords_sized = spec.n >= 1 && spec.chords.size() == static_cast<std::size_t>(spec.n);
    if (!arcs_sized) fail("arcs", "expected 2n = " + std::to_string(2 * spec.n) + " values");
    if (!chords_sized) fail("chords", "expected n = " + std::to_string(spec.n) + " values");

    bool positive = true;
    for (std::size_t k = 0; k < spec.arcs.size(); ++k) {
        if (spec.arcs[k] <= 0) {
            fail("arcs", "arc " + std::to_string(k + 1) + " must be positive");
            positive = false;
        }
    }
    for (std::size_t i = 0; i < spec.chords.size(); ++i) {
        if (spec.chords[i] <= 0) {
            fail("chords", "chord " + std::to_string(i + 1) + " must be positive");
            positive = false;
        }
    }
    const long arc_sum = std::accumulate(spec.arcs.begin(), spec.arcs.end(), 0L);
    if (arc_sum != 2L * spec.L) {
        fail("arcs", "sum is " + std::to_string(arc_sum) + ", expected 2L = " + std::to_string(2 * spec.L));
    }

    if (arcs_sized && chords_sized && positive && arc_sum == 2L * spec.L) {
        for (int i = 0; i < spec.n; ++i) {
            const int forward = forward_arc(spec, i);
            const int backward = 2 * spec.L - forward;
            const bool ok = spec.chords[i] < forward && spec.chords[i] < backward;
            verdict.chord_valid.push_back(ok);
            if (!ok) {
                fail("chords", "chord " + std::to_string(i + 1) + " has length " + std::to_string(spec.chords[i]) +
                                   ", not shorter than both arcs " + std::to_string(forward) + " and " +
                                   std::to_string(backward));
            }
        }
    }
    return verdict;
}

InvalidSpec::InvalidSpec(SpecVerdict verdict)
    : std::domain_error("invalid embedded spec: " + verdict.describe()), verdict_(std::move(verdict)) {}

EmbeddedGraph build(const EmbeddedSpec& spec) {
    auto verdict = validate_spec(spec);
    if (!verdict.ok()) throw InvalidSpec(std::move(verdict));

    const auto cycle_len = static_cast<VertexId>(2 * spec.L);
    std::vector<Edge> edges;
    std::vector<VertexId> ring(cycle_len);
    for (VertexId v = 0; v < cycle_len; ++v) {
        ring[v] = v;
        edges.emplace_back(v, (v + 1) % cycle_len);
    }

    const auto pos = node_offsets(spec);
    std::vector<VertexId> nodes(pos.begin(), pos.end());
    std::vector<std::vector<VertexId>> chord_paths;
    VertexId next = cycle_len;
    for (int i = 0; i < spec.n; ++i) {
        std::vector<VertexId> chord_path{nodes[i]};
        for (int step = 1; step < spec.chords[i]; ++step) chord_path.push_back(next++);
        chord_path.push_back(nodes[spec.n + i]);
        for (std::size_t k = 0; k + 1 < chord_path.size(); ++k) edges.emplace_back(chord_path[k], chord_path[k + 1]);
        chord_paths.push_back(std::move(chord_path));
    }

    Graph graph(next, edges);
    return {spec, std::move(graph), CycleView(std::move(ring)), std::move(nodes), std::move(chord_paths)};
}

Condition1Report check_condition1(const EmbeddedGraph& h) {
    Condition1Report report{{}, true};
    for (int i = 0; i < h.spec.n; ++i) {
        report.chords.push_back(parity_of(h.spec, i));
        report.holds = report.holds && report.chords.back().odd();
    }
    return report;
}

Condition2Report check_condition2(const EmbeddedGraph& h) {
    Condition2Report report{{}, true};
    for (int i = 0; i < h.spec.n; ++i) {
        report.cycle_lengths.push_back(adjacent_cycle_length(h.spec, i));
        report.holds = report.holds && report.cycle_lengths.back() == 2 * h.spec.L;
    }
    return report;
}

namespace {

// Vertex sequences for the chord+arc and adjacent-chord cycles of h.
class CycleTracer {
public:
    explicit CycleTracer(const EmbeddedGraph& h) : h_(h), m_(2 * h.spec.L) {}

    // Chord i closed by the clockwise arc x_i -> x_{n+i} (forward) or the
    // arc x_{n+i} -> x_i (backward).
    CycleView chord_arc(int i, bool forward) const {
        std::vector<VertexId> out;
        chord_from(i, out);
        const int far = h_.node_positions[h_.spec.n + i];
        const int near = h_.node_positions[i];
        if (forward) {
            for (int p = far; p != near; p = (p - 1 + m_) % m_) out.push_back(p);
        } else {
            for (int p = far; p != near; p = (p + 1) % m_) out.push_back(p);
        }
        return CycleView(std::move(out));
    }

    // C_i^{i+1}: arc x_i -> x_{i+1}, chord from x_{i+1}, arc back between
    // the far endpoints, chord into x_i.
    CycleView adjacent(int i) const {
        const int two_n = 2 * h_.spec.n;
        const int next = i + 1;
        const int far_next = (next + h_.spec.n) % two_n;
        const int far_i = (i + h_.spec.n) % two_n;
        std::vector<VertexId> out;
        for (int p = h_.node_positions[i]; p != static_cast<int>(h_.node_positions[next % two_n]); p = (p + 1) % m_) {
            out.push_back(p);
        }
        chord_from(next, out);
        for (int p = h_.node_positions[far_next]; p != static_cast<int>(h_.node_positions[far_i]); p = (p - 1 + m_) % m_) {
            out.push_back(p);
        }
        chord_from(far_i, out);
        return CycleView(std::move(out));
    }

private:
    // Appends the chord leaving node k (0-based), without its far endpoint.
    void chord_from(int k, std::vector<VertexId>& out) const {
        const auto& chord = h_.chord_paths[k % h_.spec.n];
        if (k < h_.spec.n) {
            out.insert(out.end(), chord.begin(), chord.end() - 1);
        } else {
            out.insert(out.end(), chord.rbegin(), chord.rend() - 1);
        }
    }

    const EmbeddedGraph& h_;
    int m_;
};

}  // namespace

EmbeddednessReport check_embeddedness(const EmbeddedGraph& h) {
    const int limit = 2 * h.spec.L;
    auto violates = [limit](int len) { return len % 2 == 0 && len < limit; };
    CycleTracer tracer(h);
    for (int i = 0; i < h.spec.n; ++i) {
        const auto parity = parity_of(h.spec, i);
        if (violates(parity.forward_cycle)) {
            return {false, tracer.chord_arc(i, true),
                    "chord " + std::to_string(i + 1) + " with its clockwise arc has even length " +
                        std::to_string(parity.forward_cycle)};
        }
        if (violates(parity.backward_cycle)) {
            return {false, tracer.chord_arc(i, false),
                    "chord " + std::to_string(i + 1) + " with its counter-clockwise arc has even length " +
                        std::to_string(parity.backward_cycle)};
        }
    }
    for (int i = 0; i < h.spec.n; ++i) {
        const int len = adjacent_cycle_length(h.spec, i);
        if (violates(len)) {
            return {false, tracer.adjacent(i),
                    "adjacent chords " + std::to_string(i + 1) + " and " + std::to_string((i + 1) % h.spec.n + 1) +
                        " form an even cycle of length " + std::to_string(len)};
        }
    }
    return {true, std::nullopt, {}};
}

bool conditions_hold(const EmbeddedSpec& spec) {
    const int limit = 2 * spec.L;
    for (int i = 0; i < spec.n; ++i) {
        if (!parity_of(spec, i).odd()) return false;
        if (adjacent_cycle_length(spec, i) != limit) return false;
    }
    // Odd chord+arc cycles and adjacent cycles of exactly 2L leave nothing
    // for the embeddedness check to reject.
    return true;
}

ConditionReport evaluate(const EmbeddedGraph& h) {
    ConditionReport report;
    report.chord_validity = validate_spec(h.spec).chord_valid;
    report.embeddedness = check_embeddedness(h);
    report.condition1 = check_condition1(h);
    report.condition2 = check_condition2(h);
    report.predicted_class = predict_class(report, h.spec);
    return report;
}

std::optional<GeodeticClass> predict_class(const ConditionReport& report, const EmbeddedSpec& spec) {
    const bool chords_ok = std::all_of(report.chord_validity.begin(), report.chord_validity.end(), [](bool b) { return b; });
    if (!chords_ok || !report.conditions_hold()) return std::nullopt;
    return spec.n == 2 ? class_for_k(1) : class_for_k(2);
}

}  // namespace geodetic
