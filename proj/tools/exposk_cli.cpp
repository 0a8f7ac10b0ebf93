// exposk: local solvability, witness moduli and bounded search for purely
// exponential Diophantine equations.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "exposk/congruence.hpp"
#include "exposk/intsearch.hpp"
#include "exposk/lemmas.hpp"
#include "exposk/parser.hpp"
#include "exposk/report.hpp"
#include "exposk/witness.hpp"

namespace {

using namespace exposk;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "360", "1e9", "5e12".
u64 parse_count(const std::string& text) {
  auto parse_plain = [&](std::string_view s) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("not a nonnegative integer: '" + text + "'");
    }
    return v;
  };
  auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_plain(text);
  u128 v = parse_plain(std::string_view(text).substr(0, e));
  u64 exp = parse_plain(std::string_view(text).substr(e + 1));
  for (u64 i = 0; i < exp; ++i) {
    v *= 10;
    if (v > ~u64{0}) throw UsageError("value too large: '" + text + "'");
  }
  return static_cast<u64>(v);
}

struct EquationSource {
  std::string eq;
  std::string file;
  std::int64_t family = 0;
  std::string pattern = "---";

  void add_to(CLI::App* cmd, bool with_file) {
    cmd->add_option("--eq", eq, "Equation, e.g. \"2^x = 3^y + 4^z + 5^w\"");
    if (with_file) cmd->add_option("--file", file, "File with one equation per line");
    cmd->add_option("--family", family, "Consecutive-base family parameter n");
    cmd->add_option("--pattern", pattern, "Sign pattern over {+,-}, e.g. \"---\"");
  }

  // (label, equation) pairs; parse errors propagate as ParseError.
  std::vector<std::pair<std::string, ExponentialEquation>> load() const {
    int given = (!eq.empty()) + (!file.empty()) + (family != 0);
    if (given != 1) throw UsageError("give exactly one of --eq, --file, --family");
    std::vector<std::pair<std::string, ExponentialEquation>> out;
    if (!eq.empty()) {
      out.emplace_back(eq, parse_equation(eq));
    } else if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      for (const auto& line : read_equation_lines(buf.str())) {
        try {
          out.emplace_back(line.text, parse_equation(line.text));
        } catch (const ParseError& e) {
          throw ParseError(e.kind(), e.position(),
                           file + ":" + std::to_string(line.line_number) + ": " + e.what());
        }
      }
      if (out.empty()) throw UsageError(file + " contains no equations");
    } else {
      FamilyPattern p{family, parse_pattern(pattern)};
      out.emplace_back(format_family_display(p), family_equation(p));
    }
    return out;
  }

  Json inputs() const {
    Json j = Json::object();
    if (!eq.empty()) j["eq"] = eq;
    if (!file.empty()) j["file"] = file;
    if (family != 0) {
      j["family"] = family;
      j["pattern"] = pattern;
    }
    return j;
  }
};

DecideOptions decide_options(const std::string& max_pairs) {
  DecideOptions opts;
  if (const char* env = std::getenv("EXPOSK_MAX_PAIRS"); env != nullptr && *env != '\0') {
    opts.max_pairs = parse_count(env);
  }
  if (!max_pairs.empty()) opts.max_pairs = parse_count(max_pairs);
  return opts;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local solvability and witness moduli for purely exponential equations"};
  app.require_subcommand(1);
  std::string max_pairs;
  app.add_option("--max-pairs", max_pairs,
                 "Pair enumeration budget (default 2^40, env EXPOSK_MAX_PAIRS)");

  // check
  auto* check = app.add_subcommand("check", "Decide solvability modulo M");
  EquationSource check_src;
  check_src.add_to(check, true);
  std::string modulus_text;
  check->add_option("--modulus", modulus_text, "Modulus M >= 2")->required();

  // verify-range
  auto* verify = app.add_subcommand("verify-range", "Check the family modulus 12(n+1)(n+2)");
  std::string verify_pattern = "---";
  std::int64_t from = 0, to = 0;
  unsigned parallel = 1;
  std::string out_file;
  bool as_json = false, timing = false;
  verify->add_option("--pattern", verify_pattern, "Sign pattern")->capture_default_str();
  verify->add_option("--from", from, "First n (>= 4)")->required();
  verify->add_option("--to", to, "Last n")->required();
  verify->add_option("--parallel", parallel, "Worker threads")->capture_default_str();
  verify->add_option("--out", out_file, "Write the JSON report here");
  verify->add_flag("--json", as_json, "Print the JSON report");
  verify->add_flag("--timing", timing, "Include per-n timings in the report");

  // search
  auto* search = app.add_subcommand("search", "Bounded exact search for integer solutions");
  EquationSource search_src;
  search_src.add_to(search, false);
  std::string bound_text = "1e12";
  search->add_option("--bound", bound_text, "Largest |term|")->capture_default_str();

  // find-modulus
  auto* find = app.add_subcommand("find-modulus", "Search for a witness modulus");
  EquationSource find_src;
  find_src.add_to(find, false);
  std::vector<u64> ladder;
  std::string prime_bound_text, max_modulus_text;
  find->add_option("--ladder", ladder, "Exponent-period targets")->delimiter(',');
  find->add_option("--prime-bound", prime_bound_text, "Largest prime in ladder moduli");
  find->add_option("--max-modulus", max_modulus_text, "Largest candidate modulus");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Residue-class verdict for the family");
  std::int64_t classify_n = 0;
  std::string classify_pattern = "---";
  std::vector<u64> solution;
  classify_cmd->add_option("--n", classify_n, "Family parameter n >= 2")->required();
  classify_cmd->add_option("--pattern", classify_pattern, "Sign pattern")->capture_default_str();
  classify_cmd->add_option("--solution", solution, "x,y,z,w to test against each case")
      ->delimiter(',')
      ->expected(4);

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "Parse and echo equations in canonical form");
  EquationSource parse_src;
  parse_src.add_to(parse_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    DecideOptions opts = decide_options(max_pairs);

    if (*check) {
      u64 m = parse_count(modulus_text);
      if (m < 2) throw UsageError("modulus must be at least 2");
      Json results = Json::array();
      bool limited = false;
      for (const auto& [label, eq] : check_src.load()) {
        auto cert = has_solution_mod(eq, m, opts);
        limited |= cert.status == Solvability::resource_exceeded;
        results.push_back(to_json(cert));
      }
      Json inputs = check_src.inputs();
      inputs["modulus"] = m;
      emit(run_report("check", inputs, results.size() == 1 ? results[0] : results));
      return limited ? kExitResource : kExitOk;
    }

    if (*verify) {
      if (from < 4 || to < from) throw UsageError("verify-range needs 4 <= from <= to");
      auto report = verify_family_range(parse_pattern(verify_pattern), from, to, parallel, opts);
      Json inputs = {{"pattern", verify_pattern}, {"from", from}, {"to", to}};
      Json j = run_report("verify-range", inputs, to_json(report, timing));
      if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw UsageError("cannot write " + out_file);
        out << j.dump(2) << '\n';
      }
      if (as_json) {
        emit(j);
      } else {
        std::size_t unsolvable = 0;
        for (const auto& e : report.entries) unsolvable += e.status == Solvability::unsolvable;
        std::cout << "pattern " << verify_pattern << ", n = " << from << ".." << to << ": "
                  << unsolvable << "/" << report.entries.size()
                  << " unsolvable mod 12(n+1)(n+2); verdict " << report.verdict << '\n';
      }
      if (report.verdict == "verified") return kExitOk;
      return report.verdict == "not a witness" ? kExitFalsified : kExitResource;
    }

    if (*search) {
      SearchBound bound{parse_count(bound_text)};
      Json results = Json::array();
      for (const auto& [label, eq] : search_src.load()) {
        auto sols = brute_force_solutions(eq, bound);
        results.push_back({{"equation", to_json(eq)},
                           {"variables", eq.variables()},
                           {"solutions", solutions_json(eq, sols)}});
      }
      Json inputs = search_src.inputs();
      inputs["bound"] = bound.max_value;
      emit(run_report("search", inputs, results[0]));
      return kExitOk;
    }

    if (*find) {
      auto loaded = find_src.load();
      const auto& eq = loaded.front().second;
      WitnessSearchConfig cfg;
      if (find_src.family != 0) {
        cfg = family_search_config({find_src.family, parse_pattern(find_src.pattern)});
      }
      if (!ladder.empty()) cfg.ladder = ladder;
      if (!prime_bound_text.empty()) cfg.prime_bound = parse_count(prime_bound_text);
      if (!max_modulus_text.empty()) cfg.max_modulus = parse_count(max_modulus_text);
      cfg.decide = opts;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto result = search_modulus(eq, cfg);
      emit(run_report("find-modulus", find_src.inputs(), to_json(result)));
      return !result.found && result.resource_limited ? kExitResource : kExitOk;
    }

    if (*classify_cmd) {
      auto delta = parse_pattern(classify_pattern);
      auto verdict = classify(delta, classify_n);
      Json trace = Json::array();
      for (const auto& d : deduction_trace(delta, classify_n)) {
        Json dj = to_json(d);
        if (!solution.empty()) {
          FamilySolution s{solution[0], solution[1], solution[2], solution[3]};
          dj["satisfied_cases"] = satisfied_cases(d, classify_n, to_assignment(s));
        }
        trace.push_back(dj);
      }
      Json outcome = {{"verdict", to_json(verdict)}, {"trace", trace}};
      Json inputs = {{"n", classify_n}, {"pattern", classify_pattern}};
      if (!solution.empty()) inputs["solution"] = solution;
      emit(run_report("classify", inputs, outcome));
      return kExitOk;
    }

    if (*parse_cmd) {
      Json results = Json::array();
      for (const auto& [label, eq] : parse_src.load()) results.push_back(to_json(eq));
      emit(run_report("parse", parse_src.inputs(), results.size() == 1 ? results[0] : results));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    emit({{"schema", kSchemaVersion},
          {"error", "parse"},
          {"kind", to_string(e.kind())},
          {"position", e.position()},
          {"message", e.what()}});
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kExitResource;
  } catch (const ResourceExceeded& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
