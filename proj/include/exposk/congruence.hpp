#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exposk/modarith.hpp"
#include "exposk/model.hpp"

namespace exposk {

enum class Solvability { solvable, unsolvable, resource_exceeded };

std::string to_string(Solvability s);

/// A set of positive exponents on which a^x mod M is constant.
struct ExponentClass {
  enum class Kind { exact, cyclic };

  std::string variable;
  Kind kind = Kind::exact;
  u64 representative = 1;
  u64 period = 0;  // cyclic only
  u64 floor = 0;   // cyclic only: least admissible member, here the representative itself

  bool contains(u64 exponent) const;

  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;
};

struct VariableOrbitSummary {
  std::string variable;
  i64 base = 2;
  u64 tail = 0;
  u64 period = 1;
};

struct DecideOptions {
  /// Budget on pairwise residue combinations across all enumeration steps.
  u64 max_pairs = u64{1} << 40;
  bool prime_power_prefilter = true;
  bool reconstruct_witness = true;
};

struct SolvabilityCertificate {
  SolvabilityCertificate(ExponentialEquation eq, u64 m)
      : equation(std::move(eq)), modulus(m), decided_modulus(m) {}

  ExponentialEquation equation;
  u64 modulus = 2;
  Solvability status = Solvability::unsolvable;

  // Solvable: one class per variable (equation order) and its least member.
  std::vector<ExponentClass> witness;
  Assignment witness_exponents;

  // Modulus on which the decision was made: `modulus` itself, or the
  // prime-power component q^e of it that already admits no solution.
  u64 decided_modulus = 2;
  std::vector<VariableOrbitSummary> orbits;  // mod decided_modulus

  // Meet-in-the-middle bookkeeping (term indices into the equation).
  std::vector<std::size_t> block_a;
  std::vector<std::size_t> block_b;
  u64 block_a_residues = 0;
  u64 block_b_residues = 0;
  u64 pair_enumerations = 0;

  std::string reason;  // resource_exceeded only
};

/// Decides whether sum of terms = 0 (mod m) has a solution in positive
/// exponents. Exact: never reports a status it has not established; when the
/// pair budget runs out the status is resource_exceeded.
/// Throws CapacityError for m > 2^62.
SolvabilityCertificate has_solution_mod(const ExponentialEquation& eq, u64 m,
                                        const DecideOptions& options = {});

/// Recomputes sum c * prod a^e mod m by modular exponentiation.
u64 residue_of(const ExponentialEquation& eq, const Assignment& assignment, u64 m);

/// A divisor d >= 2 of m with no solution mod d and a solution mod every
/// proper divisor >= 2 of d. Requires the equation to be unsolvable mod m
/// (std::invalid_argument otherwise).
u64 shrink_modulus(const ExponentialEquation& eq, u64 m, const DecideOptions& options = {});

}  // namespace exposk
