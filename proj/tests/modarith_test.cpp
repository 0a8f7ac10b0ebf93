#include <doctest.h>

#include <bit>
#include <limits>
#include <random>
#include <set>

#include "exposk/modarith.hpp"
#include "oracles.hpp"

using namespace exposk;

namespace {

bool naive_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 random_prime(std::mt19937_64& rng, u64 lo, u64 hi) {
  std::uniform_int_distribution<u64> dist(lo, hi);
  for (;;) {
    u64 c = dist(rng) | 1;
    if (naive_prime(c)) return c;
  }
}

void check_orbit_against_oracle(i64 a, u64 m, OrbitMethod method) {
  auto o = power_orbit(a, m, method);
  auto ref = oracle::orbit(a, m);
  CHECK(o.tail == ref.tail);
  CHECK(o.period == ref.period);
  CHECK(o.residues == ref.values);
}

}  // namespace

TEST_CASE("power orbit examples") {
  auto o = power_orbit(2, 12);
  CHECK(o.tail == 1);
  CHECK(o.period == 2);
  CHECK(o.residues == std::vector<u64>{2, 4, 8});

  o = power_orbit(3, 10);
  CHECK(o.tail == 0);
  CHECK(o.period == 4);
  CHECK(o.residues == std::vector<u64>{3, 9, 7, 1});

  o = power_orbit(7, 2);
  CHECK(o.tail == 0);
  CHECK(o.period == 1);
  CHECK(o.residues == std::vector<u64>{1});

  o = power_orbit(-3, 10);
  CHECK(o.base == 7);
  CHECK(o.residues == std::vector<u64>{7, 9, 3, 1});

  o = power_orbit(10, 10);
  CHECK(o.tail == 0);
  CHECK(o.period == 1);
  CHECK(o.residues == std::vector<u64>{0});

  o = power_orbit(2, 64);
  CHECK(o.tail == 5);
  CHECK(o.period == 1);
}

TEST_CASE("both cycle finders agree with the naive orbit") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    u64 m = std::uniform_int_distribution<u64>(2, 5000)(rng);
    i64 a = std::uniform_int_distribution<i64>(-20000, 20000)(rng);
    if (a == 0 || a == 1) continue;
    check_orbit_against_oracle(a, m, OrbitMethod::first_seen);
    check_orbit_against_oracle(a, m, OrbitMethod::brent);
  }
  // Above the first-seen threshold the automatic choice is Brent.
  check_orbit_against_oracle(3, 100003, OrbitMethod::automatic);
  check_orbit_against_oracle(6, 2 * 3 * 65537, OrbitMethod::automatic);
}

TEST_CASE("orbit invariants and closed form") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    u64 m = std::uniform_int_distribution<u64>(2, 10000)(rng);
    i64 a = std::uniform_int_distribution<i64>(2, 50000)(rng);
    auto o = power_orbit(a, m);
    REQUIRE(o.residues.size() == o.tail + o.period);
    CHECK(pow_mod(o.base, o.tail + o.period + 1, m) == pow_mod(o.base, o.tail + 1, m));
    std::set<u64> cycle(o.residues.begin() + o.tail, o.residues.end());
    CHECK(cycle.size() == o.period);
    for (u64 k = 0; k < o.tail; ++k) CHECK(cycle.count(o.residues[k]) == 0);
    CHECK(o.tail <= static_cast<u64>(std::bit_width(m) - 1));
    CHECK(o.period <= m);
    u64 v = 1;
    for (u64 x = 1; x <= o.tail + 2 * o.period + 3; ++x) {
      v = mul_mod(v, o.base, m);
      CHECK(o.at(x) == v);
    }
    // Projection onto a divisor lands in that divisor's orbit.
    for (u64 d : divisors(m)) {
      if (d < 2) continue;
      auto od = power_orbit(a, d);
      std::set<u64> vals(od.residues.begin(), od.residues.end());
      for (u64 r : o.residues) CHECK(vals.count(r % d) == 1);
    }
  }
}

TEST_CASE("period divides the lcm of unit orders") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    u64 m = std::uniform_int_distribution<u64>(2, 10000)(rng);
    i64 a = std::uniform_int_distribution<i64>(2, 1000)(rng);
    u64 l = 1;
    for (const auto& pp : factorize(m)) {
      if (static_cast<u64>(a) % pp.prime == 0) continue;
      l = lcm_checked(l, multiplicative_order(a, pp.value()));
    }
    CHECK(l % power_orbit(a, m).period == 0);
  }
}

TEST_CASE("orbit length cap") {
  CHECK_THROWS_AS(power_orbit(3, 1000003, OrbitMethod::automatic, 1000), ResourceExceeded);
  CHECK_THROWS_AS(power_orbit(2, kMaxModulus + 1), CapacityError);
  CHECK_THROWS_AS(power_orbit(2, 1), std::invalid_argument);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 9) == 6);
  CHECK(multiplicative_order(1, 17) == 1);
  for (u64 m : {3, 10, 1000, 999999937}) CHECK(multiplicative_order(static_cast<i64>(m - 1), m) == 2);
  CHECK(multiplicative_order(-1, 1000) == 2);
  CHECK_THROWS_AS(multiplicative_order(6, 9), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    u64 m = std::uniform_int_distribution<u64>(2, 3000)(rng);
    i64 a = std::uniform_int_distribution<i64>(1, 3000)(rng);
    if (gcd(static_cast<u64>(a), m) != 1) continue;
    auto ref = oracle::orbit(a, m);
    CHECK(ref.tail == 0);
    CHECK(multiplicative_order(a, m) == ref.period);
  }
}

TEST_CASE("factorization") {
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1584) == std::vector<PrimePower>{{2, 4}, {3, 2}, {11, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(18446744073709551557ULL) == std::vector<PrimePower>{{18446744073709551557ULL, 1}});

  std::mt19937_64 rng(60);
  for (int i = 0; i < 5; ++i) {
    u64 p = random_prime(rng, u64{1} << 29, u64{1} << 30);
    u64 q = random_prime(rng, u64{1} << 29, u64{1} << 30);
    if (p == q) continue;
    u64 n = p * q;
    CHECK(std::bit_width(n) >= 59);
    auto f = factorize(n);
    REQUIRE(f.size() == 2);
    CHECK(f[0].prime == std::min(p, q));
    CHECK(f[1].prime == std::max(p, q));
    CHECK(f[0].value() * f[1].value() == n);
    CHECK(naive_prime(f[0].prime));
    CHECK(naive_prime(f[1].prime));
  }
  for (u64 n = 2; n < 20000; ++n) {
    u64 prod = 1;
    for (const auto& pp : factorize(n)) {
      CHECK(naive_prime(pp.prime));
      prod *= pp.value();
    }
    CHECK(prod == n);
    CHECK(is_prime(n) == naive_prime(n));
  }
  // Strong pseudoprimes to several small bases.
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
}

TEST_CASE("divisors and carmichael") {
  CHECK(divisors(360).size() == 24);
  CHECK(divisors(360) == oracle::divisors(360));
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(carmichael(360) == 12);
  CHECK(carmichael(8) == 2);
  CHECK(carmichael(1) == 1);
  for (u64 m = 2; m < 400; ++m) {
    u64 lam = 0;
    for (u64 a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      u64 ord = oracle::orbit(static_cast<i64>(a), m).period;
      lam = lam == 0 ? ord : lam / gcd(lam, ord) * ord;
    }
    CHECK(carmichael(m) == (lam == 0 ? 1 : lam));
  }
}

TEST_CASE("chinese remaindering") {
  std::vector<Congruence> a{{1, 2}, {2, 3}};
  CHECK(crt_combine(a) == Congruence{5, 6});
  std::vector<Congruence> b{{0, 4}, {1, 2}};
  CHECK_FALSE(crt_combine(b).has_value());
  std::vector<Congruence> c{{3, 5}};
  CHECK(crt_combine(c) == Congruence{3, 5});
  std::vector<Congruence> d{{2, 4}, {4, 6}};
  CHECK(crt_combine(d) == Congruence{10, 12});
  CHECK(crt_combine(std::vector<Congruence>{}) == Congruence{0, 1});

  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    std::vector<Congruence> cs;
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int j = 0; j < k; ++j) {
      u64 m = std::uniform_int_distribution<u64>(1, 40)(rng);
      cs.push_back({std::uniform_int_distribution<u64>(0, m - 1)(rng), m});
    }
    u64 l = 1;
    for (const auto& c2 : cs) l = lcm_checked(l, c2.modulus);
    std::optional<u64> first;
    for (u64 x = 0; x < l && !first; ++x) {
      bool ok = true;
      for (const auto& c2 : cs) ok = ok && x % c2.modulus == c2.residue;
      if (ok) first = x;
    }
    auto got = crt_combine(cs);
    REQUIRE(got.has_value() == first.has_value());
    if (got) CHECK(*got == Congruence{*first, l});
  }
}

TEST_CASE("wide modular arithmetic") {
  const u64 m = kMaxModulus - 57;
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(m - 1, 3, m) == m - 1);
  CHECK(reduce(-1, m) == m - 1);
  CHECK(reduce(std::numeric_limits<i64>::min(), 7) ==
        static_cast<u64>((std::numeric_limits<i64>::min() % 7 + 7) % 7));
  CHECK(two_adic_valuation(96) == 5);
  CHECK_THROWS_AS(lcm_checked(u64{1} << 40, (u64{1} << 40) - 1, u64{1} << 60), CapacityError);
}
