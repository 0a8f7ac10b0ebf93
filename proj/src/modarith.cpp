#include "exposk/modarith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace exposk {

void check_modulus(u64 m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (m > kMaxModulus) {
    throw CapacityError("modulus " + std::to_string(m) + " exceeds 2^62");
  }
}

u64 pow_mod(u64 base, u64 exponent, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

u64 PowerOrbit::class_of(u64 exponent) const {
  if (exponent == 0) throw std::invalid_argument("exponents start at 1");
  if (exponent <= tail) return exponent - 1;
  return tail + (exponent - tail - 1) % period;
}

u64 PowerOrbit::at(u64 exponent) const { return residues[class_of(exponent)]; }

namespace {

PowerOrbit orbit_first_seen(u64 a, u64 m) {
  // first[v] = 1-based exponent at which residue v first appeared
  std::vector<std::uint32_t> first(m, 0);
  PowerOrbit orbit{a, m, 0, 1, {}};
  u64 v = a;
  for (u64 e = 1;; ++e) {
    if (first[v] != 0) {
      orbit.tail = first[v] - 1;
      orbit.period = e - first[v];
      return orbit;
    }
    first[v] = static_cast<std::uint32_t>(e);
    orbit.residues.push_back(v);
    v = mul_mod(v, a, m);
  }
}

PowerOrbit orbit_brent(u64 a, u64 m, u64 max_length) {
  auto step = [&](u64 v) { return mul_mod(v, a, m); };
  u64 power = 1, lam = 1;
  u64 tortoise = a, hare = step(a);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
      if (power > 2 * max_length) throw ResourceExceeded("power orbit longer than limit");
    }
    hare = step(hare);
    ++lam;
  }
  u64 mu = 0;
  tortoise = hare = a;
  for (u64 i = 0; i < lam; ++i) hare = step(hare);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  if (mu + lam > max_length) throw ResourceExceeded("power orbit longer than limit");
  PowerOrbit orbit{a, m, mu, lam, {}};
  orbit.residues.reserve(mu + lam);
  u64 v = a;
  for (u64 i = 0; i < mu + lam; ++i) {
    orbit.residues.push_back(v);
    v = step(v);
  }
  return orbit;
}

}  // namespace

PowerOrbit power_orbit(i64 a, u64 m, OrbitMethod method, u64 max_length) {
  check_modulus(m);
  u64 base = reduce(a, m);
  if (method == OrbitMethod::automatic) {
    method = m <= kFirstSeenLimit ? OrbitMethod::first_seen : OrbitMethod::brent;
  }
  if (method == OrbitMethod::first_seen) {
    if (m > (u64{1} << 28)) throw CapacityError("first-seen table needs modulus below 2^28");
    auto orbit = orbit_first_seen(base, m);
    if (orbit.class_count() > max_length) throw ResourceExceeded("power orbit longer than limit");
    return orbit;
  }
  return orbit_brent(base, m, max_length);
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_checked(u64 a, u64 b, u64 limit) {
  u64 g = std::gcd(a, b);
  u128 l = static_cast<u128>(a / g) * b;
  if (l > limit) throw CapacityError("lcm exceeds capacity");
  return static_cast<u64>(l);
}

unsigned two_adic_valuation(u64 n) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  return static_cast<unsigned>(std::countr_zero(n));
}

u64 PrimePower::value() const {
  u64 v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return false;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n is odd, composite and not a prime power of a small prime.
u64 pollard_rho(u64 n) {
  std::mt19937_64 rng(n);
  for (;;) {
    u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    // n may exceed 2^63, so the increment is done in wide arithmetic.
    auto fw = [&](u64 v) {
      u128 s = static_cast<u128>(mul_mod(v, v, n)) + c;
      return static_cast<u64>(s % n);
    };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = fw(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = fw(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = fw(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  std::vector<u64> primes;
  auto divide_out = [&](u64 p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  };
  divide_out(2);
  divide_out(3);
  constexpr u64 kTrialLimit = 1'000'000;
  for (u64 d = 5; d <= kTrialLimit && d * d <= n; d += 6) {
    divide_out(d);
    divide_out(d + 2);
  }
  if (n > 1) {
    if (n < kTrialLimit * kTrialLimit) {
      primes.push_back(n);  // no factor up to its square root
    } else {
      factor_into(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& pp : factorize(n)) {
    std::size_t count = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 carmichael(u64 n) {
  u64 result = 1;
  for (const auto& pp : factorize(n)) {
    u64 lambda;
    if (pp.prime == 2) {
      lambda = pp.exponent <= 2 ? pp.exponent : u64{1} << (pp.exponent - 2);
    } else {
      lambda = pp.value() / pp.prime * (pp.prime - 1);
    }
    result = lcm_checked(result, lambda, ~u64{0});
  }
  return result;
}

u64 multiplicative_order(i64 a, u64 m) {
  check_modulus(m);
  u64 base = reduce(a, m);
  if (std::gcd(base, m) != 1) throw std::invalid_argument("base and modulus are not coprime");
  u64 order = carmichael(m);
  for (const auto& pp : factorize(order)) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (pow_mod(base, order / pp.prime, m) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

namespace {

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
u64 inverse_mod(u64 a, u64 m) {
  i128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

}  // namespace

std::optional<Congruence> crt_combine(std::span<const Congruence> pairs) {
  Congruence acc{0, 1};
  for (const auto& p : pairs) {
    if (p.modulus == 0) throw std::invalid_argument("moduli must be positive");
    u64 r2 = p.residue % p.modulus;
    u64 g = std::gcd(acc.modulus, p.modulus);
    i128 diff = static_cast<i128>(r2) - static_cast<i128>(acc.residue);
    if (diff % static_cast<i128>(g) != 0) return std::nullopt;
    u64 m2g = p.modulus / g;
    u64 l = lcm_checked(acc.modulus, p.modulus, ~u64{0} >> 1);
    // acc.residue + acc.modulus * k with k = (diff / g) * inv(acc.modulus / g) mod m2g
    i128 dg = (diff / static_cast<i128>(g)) % static_cast<i128>(m2g);
    if (dg < 0) dg += m2g;
    u64 k = m2g == 1 ? 0
                     : mul_mod(static_cast<u64>(dg), inverse_mod((acc.modulus / g) % m2g, m2g),
                               m2g);
    u128 x = static_cast<u128>(acc.residue) + static_cast<u128>(acc.modulus) * k;
    acc = {static_cast<u64>(x % l), l};
  }
  return acc;
}

}  // namespace exposk
