#include "exposk/model.hpp"

#include <set>

namespace exposk {

ExponentialTerm::ExponentialTerm(std::int64_t coefficient, std::vector<PowerFactor> factors)
    : coefficient_(coefficient), factors_(std::move(factors)) {
  if (coefficient_ == 0) throw ModelError("term coefficient must be nonzero");
  for (const auto& f : factors_) {
    if (f.base == 0 || f.base == 1) {
      throw ModelError("base " + std::to_string(f.base) + " is not allowed");
    }
    if (f.variable.empty()) throw ModelError("empty variable name");
  }
}

ExponentialEquation::ExponentialEquation(std::vector<ExponentialTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw ModelError("equation needs at least one term");
  std::set<std::string> seen;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors()) {
      if (!seen.insert(f.variable).second) {
        throw ModelError("variable '" + f.variable + "' occurs more than once");
      }
    }
  }
}

std::vector<std::string> ExponentialEquation::variables() const {
  std::vector<std::string> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors()) out.push_back(f.variable);
  }
  return out;
}

void validate(const FamilyPattern& p) {
  if (p.n < 2) throw ModelError("family requires n >= 2");
  for (int d : p.delta) {
    if (d != 1 && d != -1) throw ModelError("sign pattern entries must be +1 or -1");
  }
  if (p.delta == SignPattern{1, 1, 1}) throw ModelError("sign pattern (+,+,+) is excluded");
}

ExponentialEquation family_equation(const FamilyPattern& p) {
  validate(p);
  return ExponentialEquation({
      ExponentialTerm(1, {{p.n, "x"}}),
      ExponentialTerm(p.delta[0], {{p.n + 1, "y"}}),
      ExponentialTerm(p.delta[1], {{p.n + 2, "z"}}),
      ExponentialTerm(p.delta[2], {{p.n + 3, "w"}}),
  });
}

const std::vector<SignPattern>& all_sign_patterns() {
  static const std::vector<SignPattern> patterns = {
      {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1},
      {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1},
  };
  return patterns;
}

std::string pattern_string(const SignPattern& delta) {
  std::string s;
  for (int d : delta) s += d > 0 ? '+' : '-';
  return s;
}

SignPattern parse_pattern(const std::string& text) {
  if (text.size() != 3) throw ModelError("pattern must be three characters over {+,-}");
  SignPattern delta{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] == '+') {
      delta[i] = 1;
    } else if (text[i] == '-') {
      delta[i] = -1;
    } else {
      throw ModelError("pattern must be three characters over {+,-}");
    }
  }
  return delta;
}

BigInt evaluate_term(const ExponentialTerm& t, const Assignment& assignment) {
  BigInt value = t.coefficient();
  for (const auto& f : t.factors()) {
    auto it = assignment.find(f.variable);
    if (it == assignment.end()) {
      throw ModelError("assignment is missing variable '" + f.variable + "'");
    }
    if (it->second == 0) throw ModelError("exponents must be positive");
    value *= boost::multiprecision::pow(BigInt(f.base), static_cast<unsigned>(it->second));
  }
  return value;
}

BigInt evaluate_equation(const ExponentialEquation& eq, const Assignment& assignment) {
  BigInt sum = 0;
  for (const auto& t : eq.terms()) sum += evaluate_term(t, assignment);
  return sum;
}

}  // namespace exposk
