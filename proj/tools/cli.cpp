#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "geodetic/cycles.hpp"
#include "geodetic/embedded.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/harness.hpp"
#include "geodetic/k4_homeo.hpp"
#include "geodetic/report.hpp"

namespace geodetic::cli {

namespace {

using report::json;

std::string join_vertices(const std::vector<VertexId>& vs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(vs[i]);
    }
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
};

// Writes the JSON document or the text body and maps the witness to the exit code.
CommandOutcome finish(Context& ctx, std::string_view command, const json& witness, json fields,
                      const std::string& text) {
    if (ctx.as_json) {
        auto doc = report::envelope(command, witness);
        doc.update(fields);
        ctx.out << doc.dump(2) << '\n';
    } else {
        ctx.out << text;
    }
    return {witness.is_null() ? kClaimHolds : kWitnessFound, std::nullopt};
}

CommandOutcome cmd_classify(Context& ctx, const std::string& path) {
    const auto g = read_edge_list_file(path);
    const auto profile = count_geodesics(g);
    const auto cls = classify_k(profile);
    std::ostringstream text;
    text << to_string(cls) << '\n';
    json witness = nullptr;
    if (profile.k_value() >= 2) {
        const auto [u, v] = *profile.witness_pair();
        const auto paths = enumerate_geodesics(g, u, v, 16);
        json jpaths = json::array();
        text << "witness pair " << u << ' ' << v << ": " << profile.count(u, v) << " geodesics of length "
             << profile.distance(u, v) << '\n';
        for (const auto& p : paths.paths) {
            text << "  " << join_vertices(p, " -> ") << '\n';
            jpaths.push_back(p);
        }
        if (paths.truncated) text << "  ...\n";
        witness = {{"pair", {u, v}},
                   {"distance", profile.distance(u, v)},
                   {"count", profile.count(u, v)},
                   {"geodesics", jpaths},
                   {"truncated", paths.truncated}};
    }
    json fields = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"oracle", report::to_json(cls)}};
    return finish(ctx, "classify", witness, fields, text.str());
}

CommandOutcome cmd_lemma1(Context& ctx, const std::string& path, std::optional<std::size_t> max_len) {
    const auto g = read_edge_list_file(path);
    const std::size_t cap = max_len.value_or(std::max<std::size_t>(g.vertex_count(), 4));
    const auto verdict = lemma1_scan(g, cap);
    std::ostringstream text;
    json witness = nullptr;
    if (verdict.nongeodetic_witness) {
        const auto& c = *verdict.nongeodetic_witness;
        text << "witness cycle (length " << c.length() << "): " << join_vertices(c.vertices()) << '\n';
        text << "every opposite pair sits at distance " << c.length() / 2 << '\n';
        witness = {{"cycle", report::to_json(c)}, {"length", c.length()}};
    } else if (verdict.exhaustive) {
        text << "no witness; scan exhaustive, graph is geodetic\n";
    } else {
        text << "no witness among cycles up to length " << cap << " (not exhaustive)\n";
    }
    return finish(ctx, "lemma1", witness, report::to_json(verdict), text.str());
}

CommandOutcome cmd_build(Context& ctx, const std::string& spec_line, const std::string& output) {
    const auto h = build(parse_spec_line(spec_line));
    const std::string edges = to_edge_list(h.graph);
    std::optional<std::string> written;
    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw std::runtime_error("cannot write " + output);
        file << "# " << format_spec(h.spec) << '\n' << edges;
        written = output;
    }
    std::ostringstream text;
    if (written) {
        text << "wrote " << h.graph.vertex_count() << " vertices, " << h.graph.edge_count() << " edges to " << output
             << '\n';
    } else {
        text << edges;
    }
    json fields = {{"spec", report::to_json(h.spec)},
                   {"vertices", h.graph.vertex_count()},
                   {"edges", h.graph.edges()},
                   {"nodes", h.node_positions},
                   {"chord_paths", h.chord_paths},
                   {"output", written ? json(*written) : json(nullptr)}};
    auto outcome = finish(ctx, "build-embedded", nullptr, fields, text.str());
    outcome.report_path = written;
    return outcome;
}

CommandOutcome cmd_check(Context& ctx, const std::string& spec_line) {
    const auto h = build(parse_spec_line(spec_line));
    const auto r = evaluate(h);
    std::ostringstream text;
    text << format_spec(h.spec) << '\n';
    text << "  vertices " << h.graph.vertex_count() << ", edges " << h.graph.edge_count() << '\n';
    text << "  embedded:    " << yes_no(r.embeddedness.holds);
    if (!r.embeddedness.holds) text << " (" << r.embeddedness.violation << ")";
    text << '\n';
    text << "  condition 1: " << yes_no(r.condition1.holds) << "  chord+arc cycles:";
    for (const auto& p : r.condition1.chords) text << ' ' << p.forward_cycle << '/' << p.backward_cycle;
    text << '\n';
    text << "  condition 2: " << yes_no(r.condition2.holds) << "  adjacent-chord cycles:";
    for (int len : r.condition2.cycle_lengths) text << ' ' << len;
    text << " (target " << 2 * h.spec.L << ")\n";
    text << "  predicted:   " << (r.predicted_class ? to_string(*r.predicted_class) : "no claim") << '\n';

    json witness = nullptr;
    if (!r.conditions_hold()) {
        json failed = json::array();
        if (!r.embeddedness.holds) failed.push_back("embeddedness");
        if (!r.condition1.holds) failed.push_back("condition1");
        if (!r.condition2.holds) failed.push_back("condition2");
        witness = {{"failed", failed}};
        if (r.embeddedness.violating_cycle) witness["violating_cycle"] = report::to_json(*r.embeddedness.violating_cycle);
    }
    json fields = {{"spec", report::to_json(h.spec)}, {"conditions", report::to_json(r)}};
    return finish(ctx, "check-embedded", witness, fields, text.str());
}

CommandOutcome cmd_k4(Context& ctx, const std::string& path) {
    const auto g = read_edge_list_file(path);
    const auto r = theorem1_check(g);
    std::ostringstream text;
    json witness = nullptr;
    if (!r.is_k4_homeomorph) {
        text << "not homeomorphic to K4; no verdict\n";
        witness = {{"failed", {"k4_homeomorph"}}};
    } else {
        text << "homeomorphic to K4\n";
        text << "  segments are geodesics:        " << yes_no(r.cond_segments_are_geodesics) << '\n';
        text << "  three-segment cycles odd:      " << yes_no(r.cond_three_segment_cycles_odd) << '\n';
        text << "  four-segment cycles equal:     " << yes_no(r.cond_four_segment_cycles_equal) << '\n';
        text << "  verdict: " << (*r.verdict_geodetic ? "GEODETIC" : "NOT GEODETIC") << '\n';
        if (!*r.verdict_geodetic) {
            json failed = json::array();
            if (!r.cond_segments_are_geodesics) failed.push_back("segments_are_geodesics");
            if (!r.cond_three_segment_cycles_odd) failed.push_back("three_segment_cycles_odd");
            if (!r.cond_four_segment_cycles_equal) failed.push_back("four_segment_cycles_equal");
            witness = {{"failed", failed}};
        }
    }
    return finish(ctx, "k4-check", witness, report::to_json(r), text.str());
}

struct GroupTally {
    std::size_t specs = 0, hold = 0, k1 = 0, k2 = 0, higher = 0, disagree = 0;
};

CommandOutcome cmd_sweep(Context& ctx, const SweepBounds& bounds, unsigned threads, const std::string& output) {
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw std::runtime_error("cannot write " + output);
        file << "{\"schema\": " << json(report::kSchema).dump() << ", \"command\": \"sweep\", \"findings\": [\n";
    }
    std::map<std::pair<int, int>, GroupTally> groups;
    json findings = json::array();
    json witness = nullptr;
    bool first = true;
    const auto summary = sweep_validate(bounds, SweepOptions{threads, 512}, [&](const SweepFinding& f) {
        auto& t = groups[{f.spec.L, f.spec.n}];
        ++t.specs;
        t.hold += f.report.conditions_hold();
        t.k1 += f.oracle_class.k == 1;
        t.k2 += f.oracle_class.k == 2;
        t.higher += f.oracle_class.k > 2;
        t.disagree += !f.agrees_with_paper;
        const auto j = report::to_json(f);
        if (!f.agrees_with_paper && witness.is_null()) witness = j;
        if (file.is_open()) {
            file << (first ? "" : ",\n") << j.dump();
            first = false;
        }
        if (ctx.as_json) findings.push_back(j);
    });

    const json bounds_json = {{"L_max", bounds.L_max}, {"include_invalid", bounds.include_invalid}};
    if (file.is_open()) {
        file << "\n], \"bounds\": " << bounds_json.dump() << ", \"summary\": " << report::to_json(summary).dump()
             << ", \"claim_holds\": " << (witness.is_null() ? "true" : "false") << ", \"witness\": " << witness.dump()
             << "}\n";
    }

    std::ostringstream text;
    text << "  L  n     specs  conds-hold      K=1      K=2      K>2  disagree\n";
    for (const auto& [key, t] : groups) {
        char line[128];
        std::snprintf(line, sizeof line, "%3d %2d %9zu %11zu %8zu %8zu %8zu %9zu\n", key.first, key.second, t.specs,
                      t.hold, t.k1, t.k2, t.higher, t.disagree);
        text << line;
    }
    text << "total " << summary.specs << " specs, " << summary.conditions_hold << " satisfy both conditions, "
         << summary.disagreements << " disagreements\n";
    if (!witness.is_null()) {
        text << "first disagreement: " << witness["spec"]["line"].get<std::string>() << '\n';
        for (const auto& d : witness["disagreements"]) text << "  " << d.get<std::string>() << '\n';
    }

    json fields = {{"bounds", bounds_json}, {"summary", report::to_json(summary)}, {"findings", findings}};
    auto outcome = finish(ctx, "sweep", witness, fields, text.str());
    if (!output.empty()) outcome.report_path = output;
    return outcome;
}

CommandOutcome cmd_cor4(Context& ctx, const std::string& path, const ChordSearchLimits& limits) {
    const auto g = read_edge_list_file(path);
    const auto r = corollary4_check(g, limits);
    std::ostringstream text;
    json witness = nullptr;
    if (!r.minimal_even_length) {
        text << "no even cycle within the length cap\n";
    } else {
        text << "minimal even cycle length " << *r.minimal_even_length << ", " << r.verdicts.size() << " cycle(s) examined"
             << (r.cycles_truncated ? " (truncated)" : "") << '\n';
        for (const auto& v : r.verdicts) {
            text << "  " << join_vertices(v.minimal_even_cycle.vertices()) << ": ";
            if (v.chord_system_found) {
                text << "chord system " << format_spec(v.chord_system_found->embedded.spec) << '\n';
            } else if (v.search_exhausted) {
                text << "no chord system (search exhausted)\n";
            } else {
                text << "unknown (search caps reached)\n";
            }
            if (v.certified_nongeodetic && witness.is_null()) {
                witness = {{"cycle", report::to_json(v.minimal_even_cycle)}};
            }
        }
    }
    text << (r.certified_nongeodetic ? "certified NOT geodetic" : "not certified") << "; oracle "
         << to_string(r.oracle_class) << '\n';
    return finish(ctx, "cor4", witness, report::to_json(r), text.str());
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geodetic graph analysis: geodesic counting, cycle criteria and embedded even graphs", "geodetic"};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err};
    app.add_flag("--json", ctx.as_json, "Machine-readable output");

    std::string graph_path, spec_line, output;
    std::optional<std::size_t> max_len;
    SweepBounds bounds;
    unsigned threads = 0;
    ChordSearchLimits limits;

    auto* classify = app.add_subcommand("classify", "K-geodetic class with a witness pair");
    classify->add_option("graph", graph_path, "Edge-list file")->required();

    auto* lemma1 = app.add_subcommand("lemma1", "Scan even cycles for a nongeodeticity witness");
    lemma1->add_option("graph", graph_path, "Edge-list file")->required();
    lemma1->add_option("--max-len", max_len, "Longest cycle to scan (default: vertex count)")->check(CLI::Range(4, 1 << 20));

    auto* build_cmd = app.add_subcommand("build-embedded", "Build the graph described by a spec line");
    build_cmd->add_option("--spec", spec_line, "e.g. 'L=3 n=2 arcs=1,2,2,1 chords=2,1'")->required();
    build_cmd->add_option("-o,--output", output, "Write the edge list here");

    auto* check = app.add_subcommand("check-embedded", "Evaluate the structural conditions of a spec");
    check->add_option("--spec", spec_line, "Spec line")->required();

    auto* k4 = app.add_subcommand("k4-check", "Geodeticity test for graphs homeomorphic to K4");
    k4->add_option("graph", graph_path, "Edge-list file")->required();

    auto* sweep = app.add_subcommand("sweep", "Validate every spec up to a cycle half-length");
    sweep->add_option("--lmax", bounds.L_max, "Largest L")->required()->check(CLI::Range(2, 16));
    sweep->add_flag("--include-invalid", bounds.include_invalid, "Also sweep specs that fail a condition");
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
    sweep->add_option("-o,--output", output, "Write the JSON report here");

    auto* cor4 = app.add_subcommand("cor4", "Search minimal even cycles for chord systems");
    cor4->add_option("graph", graph_path, "Edge-list file")->required();
    cor4->add_option("--max-cycle-len", limits.max_cycle_len, "Cycle length cap (0 = vertex count)");
    cor4->add_option("--max-paths-per-pair", limits.max_paths_per_pair, "Candidate chord paths kept per vertex pair");
    cor4->add_option("--max-combinations", limits.max_combinations, "Chord subsets examined per cycle");
    cor4->add_option("--max-cycles", limits.max_cycles, "Minimal even cycles examined");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {kClaimHolds, std::nullopt};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return {kUsageError, std::nullopt};
    }

    try {
        if (*classify) return cmd_classify(ctx, graph_path);
        if (*lemma1) return cmd_lemma1(ctx, graph_path, max_len);
        if (*build_cmd) return cmd_build(ctx, spec_line, output);
        if (*check) return cmd_check(ctx, spec_line);
        if (*k4) return cmd_k4(ctx, graph_path);
        if (*sweep) return cmd_sweep(ctx, bounds, threads, output);
        if (*cor4) return cmd_cor4(ctx, graph_path, limits);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return {kUsageError, std::nullopt};
}

}  // namespace geodetic::cli
