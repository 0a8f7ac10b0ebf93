#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace exposk {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Largest modulus handled by the fixed-width engine.
inline constexpr u64 kMaxModulus = u64{1} << 62;

/// Modulus (or a derived quantity) beyond exact fixed-width capacity.
class CapacityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured work limit was hit; the question is undecided, not answered.
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_modulus(u64 m);

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // a, b < m <= 2^62, no wrap
  return s >= m ? s - m : s;
}

inline u64 neg_mod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

/// Least nonnegative residue of a signed value.
inline u64 reduce(i64 a, u64 m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 pow_mod(u64 base, u64 exponent, u64 m);

/// Eventually periodic sequence base^1, base^2, ... mod modulus.
/// residues[i] = base^(i+1) mod modulus; the first `tail` entries never recur
/// and the last `period` entries form the cycle.
struct PowerOrbit {
  u64 base = 0;  // reduced mod modulus
  u64 modulus = 2;
  u64 tail = 0;
  u64 period = 1;
  std::vector<u64> residues;

  u64 class_count() const { return tail + period; }

  /// base^exponent mod modulus for exponent >= 1, via the closed form.
  u64 at(u64 exponent) const;

  /// Index into residues of the class containing `exponent`.
  u64 class_of(u64 exponent) const;
};

enum class OrbitMethod { automatic, first_seen, brent };

/// Moduli up to this size use a dense first-seen table; larger ones use Brent.
inline constexpr u64 kFirstSeenLimit = u64{1} << 16;

/// Default ceiling on tail + period before giving up with ResourceExceeded.
inline constexpr u64 kDefaultMaxOrbitLength = u64{1} << 27;

PowerOrbit power_orbit(i64 a, u64 m, OrbitMethod method = OrbitMethod::automatic,
                       u64 max_length = kDefaultMaxOrbitLength);

/// Least k >= 1 with a^k = 1 (mod m). Throws std::invalid_argument if gcd(a, m) != 1.
u64 multiplicative_order(i64 a, u64 m);

struct PrimePower {
  u64 prime = 2;
  unsigned exponent = 1;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 n);

/// Sorted by prime. factorize(1) is empty. Any 64-bit input is accepted.
std::vector<PrimePower> factorize(u64 n);

std::vector<u64> divisors(u64 n);

/// Carmichael function (exponent of the unit group mod n).
u64 carmichael(u64 n);

u64 gcd(u64 a, u64 b);

/// lcm, throwing CapacityError above `limit`.
u64 lcm_checked(u64 a, u64 b, u64 limit = kMaxModulus);

unsigned two_adic_valuation(u64 n);

struct Congruence {
  u64 residue = 0;
  u64 modulus = 1;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Common refinement of x = r_i (mod m_i); nullopt when incompatible.
/// An empty list gives 0 mod 1.
std::optional<Congruence> crt_combine(std::span<const Congruence> pairs);

}  // namespace exposk
