#include "exposk/lemmas.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "exposk/modarith.hpp"

namespace exposk {

namespace {

// Parity of v given (-1)^v = sign.
Parity parity_for(int sign) { return sign == 1 ? Parity::even : Parity::odd; }

void require_family(const SignPattern& delta, std::int64_t n) {
  validate(FamilyPattern{n, delta});
}

Case make_case(std::string label, std::vector<Constraint> cs) {
  return Case{std::move(label), std::move(cs)};
}

std::uint64_t exponent(const Assignment& a, const std::string& var) {
  auto it = a.find(var);
  if (it == a.end()) throw ModelError("assignment is missing variable '" + var + "'");
  return it->second;
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

bool odd_factor_direct(std::uint64_t h, std::uint64_t v, int sign, NOddFactorForm::Twist twist) {
  int s = sign;
  if (twist == NOddFactorForm::Twist::alternating && v % 2 == 1) s = -s;
  if (h == 1) return true;
  u64 p = pow_mod(2, v - 1, h);
  u64 q = s > 0 ? add_mod(p, 1 % h, h) : add_mod(p, h - 1, h);
  return q == 0;
}

// Same question answered through the divisors of 2^(v-1) + s, v <= 64.
bool odd_factor_by_divisors(std::uint64_t h, std::uint64_t v, int sign,
                            NOddFactorForm::Twist twist) {
  int s = sign;
  if (twist == NOddFactorForm::Twist::alternating && v % 2 == 1) s = -s;
  u128 q = (static_cast<u128>(1) << (v - 1));
  q = s > 0 ? q + 1 : q - 1;
  if (q == 0) return true;
  auto divs = divisors(static_cast<u64>(q));
  return std::binary_search(divs.begin(), divs.end(), h);
}

}  // namespace

CaseDisjunction mod3_constraints(const SignPattern& delta, std::int64_t n) {
  require_family(delta, n);
  const auto [d1, d2, d3] = delta;
  CaseDisjunction out{"mod-3", {}};
  switch (n % 3) {
    case 0:
      out.cases.push_back(make_case("i", {ParityOf{"z", parity_for(-d1 * d2)}}));
      break;
    case 1:
      if (d3 == -1) {
        out.cases.push_back(make_case("ii", {Contradiction{}}));
      } else {
        out.cases.push_back(make_case("ii", {ParityOf{"y", parity_for(d1)}}));
      }
      break;
    default:
      out.cases.push_back(make_case(
          "iii", {ParityOf{"x", parity_for(d2)}, ParityOf{"w", parity_for(d2 * d3)}}));
      break;
  }
  return out;
}

CaseDisjunction mod4_constraints(const SignPattern& delta, std::int64_t n) {
  require_family(delta, n);
  const auto [d1, d2, d3] = delta;
  CaseDisjunction out{"mod-4", {}};
  // (-1)^u = -s with u > 1, or (-1)^u = s with u = 1, where `gate` is the
  // exponent whose size decides whether its power vanishes mod 4.
  auto two_cases = [&](const std::string& label, const std::string& var, int s,
                       const std::string& gate) {
    out.cases.push_back(
        make_case(label, {ParityOf{var, parity_for(-s)}, VarGreater{gate, 1}}));
    out.cases.push_back(make_case(label, {ParityOf{var, parity_for(s)}, VarEquals{gate, 1}}));
  };
  switch (n % 4) {
    case 0:
      if (d1 == -1 && d2 == -1 && d3 == -1 && n % 8 == 0) {
        out.cases.push_back(
            make_case("i-mod-8", {VarEquals{"z", 2}, ParityOf{"w", Parity::odd}}));
      } else {
        two_cases("i", "w", d1 * d3, "z");
      }
      break;
    case 1:
      two_cases("ii", "z", d2, "y");
      break;
    case 2:
      two_cases("iii", "y", d1 * d3, "x");
      break;
    default:
      two_cases("iv", "x", d2, "w");
      break;
  }
  return out;
}

CaseDisjunction mod_nplus1_constraints(const SignPattern& delta, std::int64_t n) {
  require_family(delta, n);
  const auto [d1, d2, d3] = delta;
  (void)d1;
  CaseDisjunction out{"mod-n+1", {}};
  out.cases.push_back(make_case("i", {ParityOf{"x", parity_for(-d2)}, NIsPow2Minus{1}}));
  out.cases.push_back(make_case(
      "ii", {ParityOf{"x", parity_for(d2)}, VarEquals{"w", 1}, NPlusDivides{1, 2 * (d2 + d3)}}));
  for (int m : {1, 2}) {
    out.cases.push_back(make_case(
        "iii", {ParityOf{"x", parity_for(d2)}, VarGreater{"w", 1},
                NOddFactorForm{1, m, d2 * d3, "w", NOddFactorForm::Twist::none}}));
  }
  return out;
}

CaseDisjunction mod_nplus2_constraints(const SignPattern& delta, std::int64_t n) {
  require_family(delta, n);
  const auto [d1, d2, d3] = delta;
  (void)d2;
  CaseDisjunction out{"mod-n+2", {}};
  out.cases.push_back(make_case("i", {ParityOf{"y", parity_for(-d1 * d3)}, NIsPow2Minus{2}}));
  out.cases.push_back(make_case("ii", {ParityOf{"y", parity_for(d1 * d3)}, VarEquals{"x", 1},
                                       NPlusDivides{2, 2 - 2 * d3}}));
  for (int m : {1, 2}) {
    out.cases.push_back(make_case(
        "iii", {ParityOf{"y", parity_for(d1 * d3)}, VarGreater{"x", 1},
                NOddFactorForm{2, m, d3, "x", NOddFactorForm::Twist::alternating}}));
  }
  return out;
}

std::vector<CaseDisjunction> deduction_trace(const SignPattern& delta, std::int64_t n) {
  std::vector<CaseDisjunction> out{mod3_constraints(delta, n), mod4_constraints(delta, n),
                                   mod_nplus1_constraints(delta, n),
                                   mod_nplus2_constraints(delta, n)};
  if (delta == SignPattern{-1, -1, -1} && n >= 3) {
    out.push_back(CaseDisjunction{"x-at-least-2", {make_case("i", {VarGreater{"x", 1}})}});
  }
  return out;
}

CaseDisjunction assume_x_at_least_2(const CaseDisjunction& d) {
  CaseDisjunction out{d.source, {}};
  for (const auto& c : d.cases) {
    bool pins_x_to_one = std::any_of(c.constraints.begin(), c.constraints.end(), [](const auto& k) {
      auto* eq = std::get_if<VarEquals>(&k);
      return eq != nullptr && eq->variable == "x" && eq->value == 1;
    });
    if (pins_x_to_one) continue;
    Case kept{c.label, {}};
    for (const auto& k : c.constraints) {
      auto* gt = std::get_if<VarGreater>(&k);
      if (gt != nullptr && gt->variable == "x" && gt->value == 1) continue;
      kept.constraints.push_back(k);
    }
    out.cases.push_back(std::move(kept));
  }
  return out;
}

bool evaluate(const Constraint& c, std::int64_t n, const Assignment& assignment) {
  return std::visit(
      [&](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ParityOf>) {
          bool odd = exponent(assignment, k.variable) % 2 == 1;
          return odd == (k.parity == Parity::odd);
        } else if constexpr (std::is_same_v<K, VarEquals>) {
          return exponent(assignment, k.variable) == k.value;
        } else if constexpr (std::is_same_v<K, VarGreater>) {
          return exponent(assignment, k.variable) > k.value;
        } else if constexpr (std::is_same_v<K, Contradiction>) {
          return false;
        } else if constexpr (std::is_same_v<K, NPlusDivides>) {
          std::int64_t d = n + k.offset;
          return k.constant % d == 0;
        } else if constexpr (std::is_same_v<K, NIsPow2Minus>) {
          std::int64_t v = n + k.subtrahend;
          return v >= 4 && is_power_of_two(v);
        } else {
          std::int64_t target = n + k.offset;
          if (target <= 0 || target % k.multiplier != 0) return false;
          auto h = static_cast<std::uint64_t>(target / k.multiplier);
          if (h % 2 == 0) return false;
          std::uint64_t v = exponent(assignment, k.variable);
          bool direct = odd_factor_direct(h, v, k.sign, k.twist);
          if (v <= 64) {
            bool via_divisors = odd_factor_by_divisors(h, v, k.sign, k.twist);
            if (via_divisors != direct) {
              throw std::logic_error("odd factor check disagrees between routes");
            }
          }
          return direct;
        }
      },
      c);
}

bool evaluate(const Case& c, std::int64_t n, const Assignment& assignment) {
  return std::all_of(c.constraints.begin(), c.constraints.end(),
                     [&](const Constraint& k) { return evaluate(k, n, assignment); });
}

std::vector<std::size_t> satisfied_cases(const CaseDisjunction& d, std::int64_t n,
                                         const Assignment& assignment) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    if (evaluate(d.cases[i], n, assignment)) out.push_back(i);
  }
  return out;
}

std::string describe(const Constraint& c) {
  std::ostringstream out;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ParityOf>) {
          out << k.variable << (k.parity == Parity::odd ? " odd" : " even");
        } else if constexpr (std::is_same_v<K, VarEquals>) {
          out << k.variable << " = " << k.value;
        } else if constexpr (std::is_same_v<K, VarGreater>) {
          out << k.variable << " > " << k.value;
        } else if constexpr (std::is_same_v<K, Contradiction>) {
          out << "no solution";
        } else if constexpr (std::is_same_v<K, NPlusDivides>) {
          out << "(n+" << k.offset << ") | " << k.constant;
        } else if constexpr (std::is_same_v<K, NIsPow2Minus>) {
          out << "n = 2^r - " << k.subtrahend << ", r >= 2";
        } else {
          out << "n = " << (k.multiplier == 1 ? "" : "2") << "h - " << k.offset
              << ", h odd, h | 2^(" << k.variable << "-1) " << (k.sign > 0 ? "+" : "-")
              << (k.twist == NOddFactorForm::Twist::alternating ? " (-1)^" + k.variable : " 1");
        }
      },
      c);
  return out.str();
}

std::string to_string(TheoremVerdict::Status s) {
  switch (s) {
    case TheoremVerdict::Status::no_solution_proved:
      return "no-solution-proved";
    case TheoremVerdict::Status::known_solutions:
      return "known-solutions";
    case TheoremVerdict::Status::not_covered:
      return "not-covered";
  }
  return "not-covered";
}

Assignment to_assignment(const FamilySolution& s) {
  return {{"x", s[0]}, {"y", s[1]}, {"z", s[2]}, {"w", s[3]}};
}

namespace {

TheoremVerdict none_except(std::int64_t n, const std::string& citation,
                           const std::vector<std::pair<std::int64_t, std::vector<FamilySolution>>>&
                               exceptions) {
  for (const auto& [m, sols] : exceptions) {
    if (m == n) return {TheoremVerdict::Status::known_solutions, sols, true, citation};
  }
  return {TheoremVerdict::Status::no_solution_proved, {}, true, citation};
}

}  // namespace

TheoremVerdict classify(const SignPattern& delta, std::int64_t n) {
  require_family(delta, n);
  using S = SignPattern;
  const std::int64_t r8 = n % 8, r16 = n % 16;

  if (delta == S{-1, -1, -1}) {
    return none_except(n, "all-negative-pattern", {{2, {{5, 1, 1, 2}}}, {3, {{3, 2, 1, 1}}}});
  }
  if (n % 3 == 1 && delta[2] == -1) {
    return {TheoremVerdict::Status::no_solution_proved, {}, true, "mod-3-obstruction"};
  }
  if (delta == S{1, 1, -1} && (r16 == 4 || r16 == 8 || r8 == 1 || r8 == 2)) {
    return none_except(n, "residue-classes(++-)", {});
  }
  if (delta == S{1, -1, -1} && (r8 == 4 || n % 4 == 1 || r8 == 2 || r8 == 3)) {
    return none_except(n, "residue-classes(+--)",
                       {{2, {{1, 3, 1, 2}, {3, 4, 3, 2}, {5, 2, 2, 2}}}, {3, {{3, 1, 2, 1}}}});
  }
  if (delta == S{-1, 1, 1} &&
      (r16 == 8 || r16 == 12 || r8 == 5 || n % 4 == 2 || r8 == 3)) {
    return none_except(n, "residue-classes(-++)", {{3, {{1, 3, 2, 2}}}});
  }
  if (delta == S{-1, 1, -1} && (r16 == 4 || r16 == 8 || r8 == 1 || r8 == 2 || r8 == 3)) {
    return none_except(n, "residue-classes(-+-)",
                       {{2, {{2, 1, 1, 1}, {4, 3, 2, 1}, {6, 1, 3, 3}}}, {3, {{3, 2, 2, 2}}}});
  }
  if (delta == S{1, -1, 1}) {
    return {TheoremVerdict::Status::known_solutions, {{1, 2, 2, 1}}, false, "universal-identity"};
  }
  if (delta == S{-1, -1, 1}) {
    return {TheoremVerdict::Status::known_solutions, {{1, 1, 1, 1}}, false, "universal-identity"};
  }
  return {TheoremVerdict::Status::not_covered, {}, false, "none"};
}

}  // namespace exposk
