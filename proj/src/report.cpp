#include "exposk/report.hpp"

#include "exposk/intsearch.hpp"
#include "exposk/parser.hpp"

namespace exposk {

Json to_json(const ExponentialEquation& eq) {
  Json terms = Json::array();
  for (const auto& t : eq.terms()) {
    Json factors = Json::array();
    for (const auto& f : t.factors()) factors.push_back({{"base", f.base}, {"variable", f.variable}});
    terms.push_back({{"coefficient", t.coefficient()}, {"factors", factors}});
  }
  return {{"text", format_equation(eq)}, {"terms", terms}};
}

namespace {

Json orbits_json(const std::vector<VariableOrbitSummary>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    out.push_back({{"variable", o.variable}, {"base", o.base}, {"tail", o.tail},
                   {"period", o.period}});
  }
  return out;
}

Json assignment_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [k, v] : a) out[k] = v;
  return out;
}

}  // namespace

Json to_json(const SolvabilityCertificate& cert) {
  Json j = {
      {"equation", to_json(cert.equation)},
      {"modulus", cert.modulus},
      {"status", to_string(cert.status)},
      {"decided_modulus", cert.decided_modulus},
      {"orbits", orbits_json(cert.orbits)},
      {"pair_enumerations", cert.pair_enumerations},
  };
  if (cert.status == Solvability::solvable) {
    Json classes = Json::array();
    for (const auto& c : cert.witness) {
      Json cls = {{"variable", c.variable},
                  {"kind", c.kind == ExponentClass::Kind::exact ? "exact" : "cyclic"},
                  {"representative", c.representative}};
      if (c.kind == ExponentClass::Kind::cyclic) {
        cls["period"] = c.period;
        cls["floor"] = c.floor;
      }
      classes.push_back(cls);
    }
    j["witness"] = classes;
    j["witness_exponents"] = assignment_json(cert.witness_exponents);
  }
  if (cert.status == Solvability::unsolvable) {
    if (cert.decided_modulus != cert.modulus) {
      j["strategy"] = "prime-power-component";
    } else {
      j["strategy"] = "meet-in-the-middle";
    }
    j["block_a"] = cert.block_a;
    j["block_b"] = cert.block_b;
    j["block_a_residues"] = cert.block_a_residues;
    j["block_b_residues"] = cert.block_b_residues;
  }
  if (cert.status == Solvability::resource_exceeded) j["reason"] = cert.reason;
  return j;
}

Json to_json(const WitnessSearchResult& result) {
  Json j = {{"found", result.found}, {"tried", result.tried}};
  if (result.found) {
    j["modulus"] = result.certificate->modulus;
    j["tested_modulus"] = result.tested_modulus;
    j["certificate"] = to_json(*result.certificate);
  } else {
    j["reason"] = result.reason;
    j["resource_limited"] = result.resource_limited;
  }
  return j;
}

Json to_json(const VerificationReport& report, bool include_timing) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry = {{"n", e.n},
                  {"modulus", e.modulus},
                  {"status", e.capacity_exceeded ? "capacity-exceeded" : to_string(e.status)},
                  {"decided_modulus", e.decided_modulus},
                  {"orbits", orbits_json(e.orbits)}};
    if (e.status == Solvability::solvable) {
      entry["witness_exponents"] = assignment_json(e.witness_exponents);
    }
    if (include_timing) entry["millis"] = e.millis;
    entries.push_back(entry);
  }
  return {{"pattern", pattern_string(report.delta)},
          {"from", report.n_from},
          {"to", report.n_to},
          {"exploratory", report.exploratory},
          {"entries", entries},
          {"verdict", report.verdict}};
}

Json to_json(const Constraint& c) {
  return std::visit(
      [&](const auto& k) -> Json {
        using K = std::decay_t<decltype(k)>;
        Json j = {{"text", describe(c)}};
        if constexpr (std::is_same_v<K, ParityOf>) {
          j["kind"] = "parity";
          j["variable"] = k.variable;
          j["parity"] = k.parity == Parity::odd ? "odd" : "even";
        } else if constexpr (std::is_same_v<K, VarEquals>) {
          j["kind"] = "var-eq";
          j["variable"] = k.variable;
          j["value"] = k.value;
        } else if constexpr (std::is_same_v<K, VarGreater>) {
          j["kind"] = "var-gt";
          j["variable"] = k.variable;
          j["value"] = k.value;
        } else if constexpr (std::is_same_v<K, Contradiction>) {
          j["kind"] = "contradiction";
        } else if constexpr (std::is_same_v<K, NPlusDivides>) {
          j["kind"] = "n-plus-divides";
          j["offset"] = k.offset;
          j["constant"] = k.constant;
        } else if constexpr (std::is_same_v<K, NIsPow2Minus>) {
          j["kind"] = "n-is-pow2-minus";
          j["subtrahend"] = k.subtrahend;
        } else {
          j["kind"] = "n-odd-factor-form";
          j["offset"] = k.offset;
          j["multiplier"] = k.multiplier;
          j["sign"] = k.sign;
          j["variable"] = k.variable;
          j["alternating"] = k.twist == NOddFactorForm::Twist::alternating;
        }
        return j;
      },
      c);
}

Json to_json(const CaseDisjunction& d) {
  Json cases = Json::array();
  for (const auto& c : d.cases) {
    Json cs = Json::array();
    for (const auto& k : c.constraints) cs.push_back(to_json(k));
    cases.push_back({{"label", c.label}, {"constraints", cs}});
  }
  return {{"source", d.source}, {"cases", cases}};
}

Json to_json(const TheoremVerdict& v) {
  Json sols = Json::array();
  for (const auto& s : v.solutions) sols.push_back(s);
  return {{"status", to_string(v.status)},
          {"solutions", sols},
          {"complete", v.complete},
          {"citation", v.citation}};
}

Json solutions_json(const ExponentialEquation& eq, const std::vector<Assignment>& solutions) {
  Json out = Json::array();
  for (const auto& s : solutions) out.push_back(exponent_vector(eq, s));
  return out;
}

Json run_report(const std::string& command, Json inputs, Json outcome) {
  return {{"schema", kSchemaVersion},
          {"version", kEngineVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"outcome", std::move(outcome)}};
}

}  // namespace exposk
