#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "exposk/model.hpp"

namespace exposk {

struct SearchBound {
  /// Largest admissible |term|; at most 2^62.
  std::uint64_t max_value = 1'000'000'000'000ULL;
};

/// Every assignment with all |terms| <= bound.max_value whose exact sum is
/// zero, sorted by exponent vector in variable order.
/// Throws ModelError when a non-constant term has a base of absolute value 1.
std::vector<Assignment> brute_force_solutions(const ExponentialEquation& eq,
                                              const SearchBound& bound = {});

/// brute_force_solutions of the family equation for each n in [n_from, n_to].
std::map<std::int64_t, std::vector<Assignment>> family_solution_table(const SignPattern& delta,
                                                                      std::int64_t n_from,
                                                                      std::int64_t n_to,
                                                                      const SearchBound& bound = {});

/// Exponents of an assignment in the equation's variable order.
std::vector<std::uint64_t> exponent_vector(const ExponentialEquation& eq, const Assignment& a);

}  // namespace exposk
