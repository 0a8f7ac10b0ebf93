#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "exposk/model.hpp"

// Congruence facts every solution of
//   n^x + d1 (n+1)^y + d2 (n+2)^z + d3 (n+3)^w = 0
// must satisfy, encoded as finite disjunctions of concrete, checkable
// constraints, plus the residue-class classifier built on them.
namespace exposk {

enum class Parity { odd, even };

struct ParityOf {
  std::string variable;
  Parity parity = Parity::odd;
  friend bool operator==(const ParityOf&, const ParityOf&) = default;
};

struct VarEquals {
  std::string variable;
  std::uint64_t value = 1;
  friend bool operator==(const VarEquals&, const VarEquals&) = default;
};

struct VarGreater {
  std::string variable;
  std::uint64_t value = 1;
  friend bool operator==(const VarGreater&, const VarGreater&) = default;
};

struct Contradiction {
  friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

// (n + offset) divides constant; constant 0 is divisible by everything.
struct NPlusDivides {
  int offset = 1;
  std::int64_t constant = 0;
  friend bool operator==(const NPlusDivides&, const NPlusDivides&) = default;
};

// n = 2^r - 1 with r >= 2, or n = 2^s - 2 with s >= 2.
struct NIsPow2Minus {
  int subtrahend = 1;  // 1 or 2
  friend bool operator==(const NIsPow2Minus&, const NIsPow2Minus&) = default;
};

// n = multiplier * h - offset for an odd h dividing 2^(v-1) + sign * s(v),
// where s(v) = 1 or s(v) = (-1)^v.
struct NOddFactorForm {
  enum class Twist { none, alternating };

  int offset = 1;
  int multiplier = 1;  // 1 or 2
  int sign = 1;
  std::string variable;
  Twist twist = Twist::none;
  friend bool operator==(const NOddFactorForm&, const NOddFactorForm&) = default;
};

using Constraint = std::variant<ParityOf, VarEquals, VarGreater, Contradiction, NPlusDivides,
                                NIsPow2Minus, NOddFactorForm>;

struct Case {
  std::string label;
  std::vector<Constraint> constraints;
  friend bool operator==(const Case&, const Case&) = default;
};

/// At least one case holds for every solution.
struct CaseDisjunction {
  std::string source;
  std::vector<Case> cases;
  friend bool operator==(const CaseDisjunction&, const CaseDisjunction&) = default;
};

CaseDisjunction mod3_constraints(const SignPattern& delta, std::int64_t n);
CaseDisjunction mod4_constraints(const SignPattern& delta, std::int64_t n);
CaseDisjunction mod_nplus1_constraints(const SignPattern& delta, std::int64_t n);
CaseDisjunction mod_nplus2_constraints(const SignPattern& delta, std::int64_t n);

/// The four generators in order, plus "x-at-least-2" for the all-negative
/// pattern when n >= 3.
std::vector<CaseDisjunction> deduction_trace(const SignPattern& delta, std::int64_t n);

/// Applies x >= 2: drops cases requiring x = 1 and the now redundant x > 1.
CaseDisjunction assume_x_at_least_2(const CaseDisjunction& d);

/// Decides a constraint for concrete n and exponents.
bool evaluate(const Constraint& c, std::int64_t n, const Assignment& assignment);

bool evaluate(const Case& c, std::int64_t n, const Assignment& assignment);

/// Indices of the cases whose constraints all hold.
std::vector<std::size_t> satisfied_cases(const CaseDisjunction& d, std::int64_t n,
                                         const Assignment& assignment);

std::string describe(const Constraint& c);

using FamilySolution = std::array<std::uint64_t, 4>;  // (x, y, z, w)

struct TheoremVerdict {
  enum class Status { no_solution_proved, known_solutions, not_covered };

  Status status = Status::not_covered;
  std::vector<FamilySolution> solutions;
  bool complete = false;  // solutions is the full solution set
  std::string citation;
};

std::string to_string(TheoremVerdict::Status s);

TheoremVerdict classify(const SignPattern& delta, std::int64_t n);

Assignment to_assignment(const FamilySolution& s);

}  // namespace exposk
