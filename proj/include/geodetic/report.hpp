#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "geodetic/cycles.hpp"
#include "geodetic/embedded.hpp"
#include "geodetic/geodesy.hpp"
#include "geodetic/harness.hpp"
#include "geodetic/k4_homeo.hpp"

// Machine-readable reports. Every document is a JSON object carrying
//   "schema":      kSchema
//   "command":     the producing subcommand
//   "claim_holds": true when the geodetic-favourable claim holds
//   "witness":     null, or the object that refutes the claim
// plus command-specific fields. The layout is described in docs/report-schema.md.
namespace geodetic::report {

using nlohmann::json;

inline constexpr std::string_view kSchema = "geodetic-report/1";

json to_json(const EmbeddedSpec& spec);
EmbeddedSpec spec_from_json(const json& j);

json to_json(const GeodeticClass& c);
GeodeticClass class_from_json(const json& j);

json to_json(const CycleView& c);
CycleView cycle_from_json(const json& j);

json to_json(const ConditionReport& r);
ConditionReport condition_report_from_json(const json& j);

json to_json(const SweepFinding& f);
SweepFinding finding_from_json(const json& j);

json to_json(const Lemma1Verdict& v);
json to_json(const Theorem1Report& r);
json to_json(const Corollary4Report& r);
json to_json(const SweepSummary& s);

json envelope(std::string_view command, const json& witness);

struct ReportDocument {
    std::string command;
    bool claim_holds = false;
    json witness;  ///< null when absent
    json body;     ///< the whole document
};

/// Parses and checks the envelope. Throws std::runtime_error on a schema
/// mismatch or missing envelope fields.
ReportDocument read_report(std::string_view text);

/// The findings array of a "sweep" document.
std::vector<SweepFinding> read_sweep_findings(const ReportDocument& doc);

}  // namespace geodetic::report
