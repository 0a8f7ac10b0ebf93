#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exposk/congruence.hpp"
#include "exposk/model.hpp"

namespace exposk {

struct WitnessSearchConfig {
  /// Exponent-period targets L, ascending.
  std::vector<u64> ladder{1, 2, 4, 6, 8, 12, 16, 24, 36, 48, 60, 120};
  u64 prime_bound = 10'000;
  u64 max_modulus = u64{1} << 40;
  /// Folded (by lcm) into every ladder candidate.
  std::vector<u64> extra_factors;
  /// Tried, in order, before the ladder.
  std::vector<u64> preferred_moduli;
  DecideOptions decide;

  void validate() const;
};

/// Preferred modulus 12(n+1)(n+2), extra factors 12, n+1, n+2, n+3.
WitnessSearchConfig family_search_config(const FamilyPattern& p);

/// Ladder candidate for period target L: 2^a * prod{odd p <= B : (p-1) | L} * extras,
/// a = min(2 + v2(L), 6), largest primes dropped until it fits max_modulus.
/// nullopt if even the prime-free part exceeds max_modulus.
std::optional<u64> ladder_modulus(u64 period_target, const WitnessSearchConfig& cfg);

struct WitnessSearchResult {
  bool found = false;
  std::optional<SolvabilityCertificate> certificate;  // unsolvable, on the shrunk modulus
  u64 tested_modulus = 0;                             // candidate that first failed
  std::vector<u64> tried;
  std::string reason;  // when not found
  bool resource_limited = false;
};

WitnessSearchResult search_modulus(const ExponentialEquation& eq,
                                   const WitnessSearchConfig& cfg = {});

struct RangeEntry {
  std::int64_t n = 4;
  u64 modulus = 0;
  Solvability status = Solvability::unsolvable;
  bool capacity_exceeded = false;
  u64 decided_modulus = 0;
  std::vector<VariableOrbitSummary> orbits;
  Assignment witness_exponents;  // when solvable
  double millis = 0;
};

struct VerificationReport {
  SignPattern delta{-1, -1, -1};
  std::int64_t n_from = 4;
  std::int64_t n_to = 4;
  bool exploratory = false;  // pattern other than all-negative
  std::vector<RangeEntry> entries;
  std::string verdict;  // "verified", "not a witness" or "incomplete"
};

/// 12(n+1)(n+2), throwing CapacityError past 2^62.
u64 family_modulus(std::int64_t n);

/// Decides each family equation mod 12(n+1)(n+2). Entries are ordered by n
/// whatever the thread count.
VerificationReport verify_family_range(const SignPattern& delta, std::int64_t n_from,
                                       std::int64_t n_to, unsigned threads = 1,
                                       const DecideOptions& options = {});

}  // namespace exposk
