#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symineq/report.hpp"
#include "symineq/spectral.hpp"
#include "symineq/verify.hpp"

namespace symineq {

/// Run metadata embedded in every report file. Re-running the serialized
/// config reproduces all outcomes; only the timestamp differs.
struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::string artifact_version;
    std::string timestamp;  // UTC, ISO-8601
    std::string outcome;    // ALL_PASS | VIOLATIONS | ERROR
    std::uint64_t violation_count = 0;
};

std::string utc_timestamp_now();

// Numbers are emitted in shortest-round-trip form, so every recorded trial
// replays bit-exactly after a JSON round trip.
nlohmann::json to_json(const TrialInputs& in);
TrialInputs trial_inputs_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InequalityReport& rep);
InequalityReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SuiteSummary& summary);

nlohmann::json to_json(const RunManifest& manifest);

nlohmann::json config_to_json(const TrialConfig& cfg,
                              const std::vector<std::string>& suite);
nlohmann::json config_to_json(const MatrixSuiteConfig& cfg);

/// Full report document: {manifest, summary, violations}.
nlohmann::json report_document(const RunManifest& manifest,
                               const SuiteSummary& summary);

/// One CSV row per violation, vector cells ';'-joined, 17 significant
/// digits. The manifest rides along as a leading '#' comment line so every
/// output file carries it.
std::string violations_csv(const SuiteSummary& summary, const RunManifest& manifest);

}  // namespace symineq
