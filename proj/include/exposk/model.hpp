#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exposk {

using BigInt = boost::multiprecision::cpp_int;

// Exponent assignment, variable name -> positive exponent.
using Assignment = std::map<std::string, std::uint64_t>;

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PowerFactor {
  std::int64_t base = 2;
  std::string variable;

  friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

// c * a_1^{x_1} * ... * a_l^{x_l}; an empty factor list is a constant term.
class ExponentialTerm {
 public:
  ExponentialTerm(std::int64_t coefficient, std::vector<PowerFactor> factors);

  std::int64_t coefficient() const { return coefficient_; }
  const std::vector<PowerFactor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  friend bool operator==(const ExponentialTerm&, const ExponentialTerm&) = default;

 private:
  std::int64_t coefficient_;
  std::vector<PowerFactor> factors_;
};

/// Sum of terms equal to zero. Every exponent variable occurs exactly once.
class ExponentialEquation {
 public:
  explicit ExponentialEquation(std::vector<ExponentialTerm> terms);

  const std::vector<ExponentialTerm>& terms() const { return terms_; }

  /// Variables in order of first appearance.
  std::vector<std::string> variables() const;

  friend bool operator==(const ExponentialEquation&, const ExponentialEquation&) = default;

 private:
  std::vector<ExponentialTerm> terms_;
};

// (delta1, delta2, delta3), each +1 or -1.
using SignPattern = std::array<int, 3>;

struct FamilyPattern {
  std::int64_t n = 2;
  SignPattern delta{-1, -1, -1};
};

/// Throws ModelError unless n >= 2 and delta is a sign triple other than (1,1,1).
void validate(const FamilyPattern& p);

/// n^x + d1 (n+1)^y + d2 (n+2)^z + d3 (n+3)^w = 0.
ExponentialEquation family_equation(const FamilyPattern& p);

/// The seven sign patterns other than (1,1,1).
const std::vector<SignPattern>& all_sign_patterns();

/// "+-+" style encoding of a sign pattern.
std::string pattern_string(const SignPattern& delta);
SignPattern parse_pattern(const std::string& text);

BigInt evaluate_term(const ExponentialTerm& t, const Assignment& assignment);
BigInt evaluate_equation(const ExponentialEquation& eq, const Assignment& assignment);

}  // namespace exposk
