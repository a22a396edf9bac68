#include "geodetic/report.hpp"

#include <stdexcept>

namespace geodetic::report {

namespace {

json edge_to_json(const std::optional<Edge>& e) {
    if (!e) return nullptr;
    return json::array({e->first, e->second});
}

std::optional<Edge> edge_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return Edge{j.at(0).get<VertexId>(), j.at(1).get<VertexId>()};
}

GeodeticKind kind_from_string(const std::string& s) {
    for (auto kind : {GeodeticKind::Geodetic, GeodeticKind::Bigeodetic, GeodeticKind::Trigeodetic, GeodeticKind::KGeodetic}) {
        if (to_string(kind) == s) return kind;
    }
    throw std::runtime_error("unknown geodetic class '" + s + "'");
}

}  // namespace

json to_json(const EmbeddedSpec& spec) {
    return {{"L", spec.L}, {"n", spec.n}, {"arcs", spec.arcs}, {"chords", spec.chords}, {"line", format_spec(spec)}};
}

EmbeddedSpec spec_from_json(const json& j) {
    return {j.at("L").get<int>(), j.at("n").get<int>(), j.at("arcs").get<std::vector<int>>(),
            j.at("chords").get<std::vector<int>>()};
}

json to_json(const GeodeticClass& c) { return {{"class", to_string(c.kind)}, {"k", c.k}}; }

GeodeticClass class_from_json(const json& j) {
    return {kind_from_string(j.at("class").get<std::string>()), j.at("k").get<PathCount>()};
}

json to_json(const CycleView& c) { return c.vertices(); }

CycleView cycle_from_json(const json& j) { return CycleView(j.get<std::vector<VertexId>>()); }

json to_json(const ConditionReport& r) {
    json chords = json::array();
    for (const auto& p : r.condition1.chords) {
        chords.push_back({{"forward", p.forward_cycle}, {"backward", p.backward_cycle}, {"odd", p.odd()}});
    }
    json violation = nullptr;
    if (r.embeddedness.violating_cycle) {
        violation = {{"cycle", to_json(*r.embeddedness.violating_cycle)}, {"description", r.embeddedness.violation}};
    }
    return {
        {"chord_validity", r.chord_validity},
        {"embedded", r.embeddedness.holds},
        {"embeddedness_violation", violation},
        {"condition1", {{"holds", r.condition1.holds}, {"chords", chords}}},
        {"condition2", {{"holds", r.condition2.holds}, {"cycle_lengths", r.condition2.cycle_lengths}}},
        {"predicted_class", r.predicted_class ? to_json(*r.predicted_class) : json(nullptr)},
    };
}

ConditionReport condition_report_from_json(const json& j) {
    ConditionReport r;
    r.chord_validity = j.at("chord_validity").get<std::vector<bool>>();
    r.embeddedness.holds = j.at("embedded").get<bool>();
    if (const auto& v = j.at("embeddedness_violation"); !v.is_null()) {
        r.embeddedness.violating_cycle = cycle_from_json(v.at("cycle"));
        r.embeddedness.violation = v.at("description").get<std::string>();
    }
    r.condition1.holds = j.at("condition1").at("holds").get<bool>();
    for (const auto& p : j.at("condition1").at("chords")) {
        r.condition1.chords.push_back({p.at("forward").get<int>(), p.at("backward").get<int>()});
    }
    r.condition2.holds = j.at("condition2").at("holds").get<bool>();
    r.condition2.cycle_lengths = j.at("condition2").at("cycle_lengths").get<std::vector<int>>();
    if (const auto& p = j.at("predicted_class"); !p.is_null()) r.predicted_class = class_from_json(p);
    return r;
}

json to_json(const SweepFinding& f) {
    json violations = json::array();
    for (const auto& v : f.violations) {
        violations.push_back(
            {{"u", v.u}, {"v", v.v}, {"distance", v.distance}, {"count", v.count}, {"opposite", v.opposite}});
    }
    json oracle = to_json(f.oracle_class);
    oracle["witness"] = edge_to_json(f.oracle_witness);
    return {
        {"spec", to_json(f.spec)},
        {"conditions_hold", f.report.conditions_hold()},
        {"conditions", to_json(f.report)},
        {"oracle", oracle},
        {"pair_property", f.pair_property_holds},
        {"agrees", f.agrees_with_paper},
        {"disagreements", f.disagreements},
        {"violations", violations},
    };
}

SweepFinding finding_from_json(const json& j) {
    SweepFinding f;
    f.spec = spec_from_json(j.at("spec"));
    f.report = condition_report_from_json(j.at("conditions"));
    f.oracle_class = class_from_json(j.at("oracle"));
    f.oracle_witness = edge_from_json(j.at("oracle").at("witness"));
    f.pair_property_holds = j.at("pair_property").get<bool>();
    f.agrees_with_paper = j.at("agrees").get<bool>();
    f.disagreements = j.at("disagreements").get<std::vector<std::string>>();
    for (const auto& v : j.at("violations")) {
        f.violations.push_back({v.at("u").get<VertexId>(), v.at("v").get<VertexId>(), v.at("distance").get<std::uint32_t>(),
                                v.at("count").get<PathCount>(), v.at("opposite").get<bool>()});
    }
    return f;
}

json to_json(const Lemma1Verdict& v) {
    return {
        {"witness_cycle", v.nongeodetic_witness ? to_json(*v.nongeodetic_witness) : json(nullptr)},
        {"scanned_max_length", v.scanned_max_length},
        {"exhaustive", v.exhaustive},
    };
}

json to_json(const Theorem1Report& r) {
    return {
        {"is_k4_homeomorph", r.is_k4_homeomorph},
        {"segments_are_geodesics", r.cond_segments_are_geodesics},
        {"three_segment_cycles_odd", r.cond_three_segment_cycles_odd},
        {"four_segment_cycles_equal", r.cond_four_segment_cycles_equal},
        {"three_segment_cycle_lengths", r.three_segment_cycle_lengths},
        {"four_segment_cycle_lengths", r.four_segment_cycle_lengths},
        {"verdict_geodetic", r.verdict_geodetic ? json(*r.verdict_geodetic) : json(nullptr)},
    };
}

json to_json(const Corollary4Report& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json system = nullptr;
        if (v.chord_system_found) {
            system = {{"spec", to_json(v.chord_system_found->embedded.spec)},
                      {"host_map", v.chord_system_found->host_map}};
        }
        verdicts.push_back({{"cycle", to_json(v.minimal_even_cycle)},
                            {"chord_system", system},
                            {"certified_nongeodetic", v.certified_nongeodetic},
                            {"search_exhausted", v.search_exhausted}});
    }
    return {
        {"minimal_even_length", r.minimal_even_length ? json(*r.minimal_even_length) : json(nullptr)},
        {"verdicts", verdicts},
        {"cycles_truncated", r.cycles_truncated},
        {"certified_nongeodetic", r.certified_nongeodetic},
        {"oracle", to_json(r.oracle_class)},
        {"sound", r.sound},
    };
}

json to_json(const SweepSummary& s) {
    return {{"specs", s.specs},           {"conditions_hold", s.conditions_hold}, {"geodetic", s.geodetic},
            {"bigeodetic", s.bigeodetic}, {"higher", s.higher},                   {"disagreements", s.disagreements}};
}

json envelope(std::string_view command, const json& witness) {
    return {{"schema", kSchema}, {"command", command}, {"claim_holds", witness.is_null()}, {"witness", witness}};
}

ReportDocument read_report(std::string_view text) {
    ReportDocument doc;
    try {
        doc.body = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("report is not valid JSON: ") + e.what());
    }
    if (!doc.body.is_object()) throw std::runtime_error("report must be a JSON object");
    const auto schema = doc.body.value("schema", std::string{});
    if (schema != kSchema) throw std::runtime_error("unsupported report schema '" + schema + "'");
    if (!doc.body.contains("command") || !doc.body.contains("claim_holds") || !doc.body.contains("witness")) {
        throw std::runtime_error("report envelope incomplete");
    }
    doc.command = doc.body.at("command").get<std::string>();
    doc.claim_holds = doc.body.at("claim_holds").get<bool>();
    doc.witness = doc.body.at("witness");
    if (doc.claim_holds != doc.witness.is_null()) throw std::runtime_error("claim_holds disagrees with witness");
    return doc;
}

std::vector<SweepFinding> read_sweep_findings(const ReportDocument& doc) {
    if (doc.command != "sweep") throw std::runtime_error("not a sweep report");
    std::vector<SweepFinding> out;
    for (const auto& j : doc.body.at("findings")) out.push_back(finding_from_json(j));
    return out;
}

}  // namespace geodetic::report
