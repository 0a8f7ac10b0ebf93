#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exposk/congruence.hpp"
#include "exposk/lemmas.hpp"
#include "exposk/model.hpp"
#include "exposk/witness.hpp"

// JSON views of the engine's results. Objects use sorted keys, so equal
// inputs serialize to identical bytes.
namespace exposk {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "1.0.0";

using Json = nlohmann::json;

Json to_json(const ExponentialEquation& eq);
Json to_json(const SolvabilityCertificate& cert);
Json to_json(const WitnessSearchResult& result);
Json to_json(const VerificationReport& report, bool include_timing);
Json to_json(const Constraint& c);
Json to_json(const CaseDisjunction& d);
Json to_json(const TheoremVerdict& v);
Json solutions_json(const ExponentialEquation& eq, const std::vector<Assignment>& solutions);

/// Envelope shared by every command: schema, version, command, inputs, outcome.
Json run_report(const std::string& command, Json inputs, Json outcome);

}  // namespace exposk
