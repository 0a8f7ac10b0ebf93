#include "exposk/witness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace exposk {

void WitnessSearchConfig::validate() const {
  if (ladder.empty()) throw std::invalid_argument("ladder must be nonempty");
  if (!std::is_sorted(ladder.begin(), ladder.end()) || ladder.front() == 0) {
    throw std::invalid_argument("ladder must be positive and ascending");
  }
  if (max_modulus < 2 || max_modulus > kMaxModulus) {
    throw std::invalid_argument("max modulus must lie in [2, 2^62]");
  }
}

u64 family_modulus(std::int64_t n) {
  if (n < 2) throw ModelError("family requires n >= 2");
  u128 m = static_cast<u128>(12) * static_cast<u64>(n + 1) * static_cast<u64>(n + 2);
  if (m > kMaxModulus) throw CapacityError("12(n+1)(n+2) exceeds 2^62");
  return static_cast<u64>(m);
}

WitnessSearchConfig family_search_config(const FamilyPattern& p) {
  validate(p);
  WitnessSearchConfig cfg;
  auto n = static_cast<u64>(p.n);
  cfg.extra_factors = {12, n + 1, n + 2, n + 3};
  cfg.preferred_moduli = {family_modulus(p.n)};
  return cfg;
}

std::optional<u64> ladder_modulus(u64 period_target, const WitnessSearchConfig& cfg) {
  if (period_target == 0) throw std::invalid_argument("period target must be positive");
  unsigned a = std::min(2U + two_adic_valuation(period_target), 6U);
  u64 core = u64{1} << a;
  if (core > cfg.max_modulus) return std::nullopt;
  try {
    for (u64 f : cfg.extra_factors) core = lcm_checked(core, f, cfg.max_modulus);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
  std::vector<u64> primes;
  for (u64 p = 3; p <= cfg.prime_bound; p += 2) {
    if (period_target % (p - 1) == 0 && is_prime(p)) primes.push_back(p);
  }
  for (;;) {
    u64 m = core;
    bool fits = true;
    for (u64 p : primes) {
      if (static_cast<u128>(m) * p / gcd(m, p) > cfg.max_modulus) {
        fits = false;
        break;
      }
      m = lcm_checked(m, p, cfg.max_modulus);
    }
    if (fits) return m;
    primes.pop_back();
  }
}

WitnessSearchResult search_modulus(const ExponentialEquation& eq,
                                   const WitnessSearchConfig& cfg) {
  cfg.validate();
  WitnessSearchResult result;
  DecideOptions quiet = cfg.decide;
  quiet.reconstruct_witness = false;

  std::vector<u64> candidates = cfg.preferred_moduli;
  for (u64 L : cfg.ladder) {
    if (auto m = ladder_modulus(L, cfg)) candidates.push_back(*m);
  }
  for (u64 m : candidates) {
    if (m < 2 || m > kMaxModulus) continue;
    if (std::find(result.tried.begin(), result.tried.end(), m) != result.tried.end()) continue;
    result.tried.push_back(m);
    auto cert = has_solution_mod(eq, m, quiet);
    if (cert.status == Solvability::resource_exceeded) {
      result.resource_limited = true;
      continue;
    }
    if (cert.status == Solvability::solvable) continue;
    u64 d = shrink_modulus(eq, m, quiet);
    auto check = has_solution_mod(eq, d, quiet);
    if (check.status != Solvability::unsolvable) {
      throw std::logic_error("shrunk modulus failed to re-verify");
    }
    result.found = true;
    result.tested_modulus = m;
    result.certificate = std::move(check);
    return result;
  }
  result.reason = result.resource_limited
                      ? "resource-exceeded on some candidates; no witness among the rest"
                      : "every candidate modulus admits a solution";
  return result;
}

namespace {

RangeEntry check_one(const SignPattern& delta, std::int64_t n, const DecideOptions& options) {
  RangeEntry entry;
  entry.n = n;
  auto start = std::chrono::steady_clock::now();
  try {
    entry.modulus = family_modulus(n);
    auto cert = has_solution_mod(family_equation({n, delta}), entry.modulus, options);
    entry.status = cert.status;
    entry.decided_modulus = cert.decided_modulus;
    entry.orbits = cert.orbits;
    entry.witness_exponents = cert.witness_exponents;
  } catch (const CapacityError&) {
    entry.capacity_exceeded = true;
    entry.status = Solvability::resource_exceeded;
  }
  entry.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
  return entry;
}

}  // namespace

VerificationReport verify_family_range(const SignPattern& delta, std::int64_t n_from,
                                       std::int64_t n_to, unsigned threads,
                                       const DecideOptions& options) {
  if (n_from < 4 || n_from > n_to) {
    throw std::invalid_argument("range must satisfy 4 <= from <= to");
  }
  validate(FamilyPattern{n_from, delta});
  VerificationReport report;
  report.delta = delta;
  report.n_from = n_from;
  report.n_to = n_to;
  report.exploratory = delta != SignPattern{-1, -1, -1};

  const auto count = static_cast<std::size_t>(n_to - n_from + 1);
  report.entries.resize(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      report.entries[i] = check_one(delta, n_from + static_cast<std::int64_t>(i), options);
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  bool any_solvable = false, any_incomplete = false;
  for (const auto& e : report.entries) {
    any_solvable |= e.status == Solvability::solvable;
    any_incomplete |= e.status == Solvability::resource_exceeded;
  }
  report.verdict = any_solvable ? "not a witness" : any_incomplete ? "incomplete" : "verified";
  return report;
}

}  // namespace exposk
