#include "exposk/congruence.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace exposk {

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::solvable:
      return "solvable";
    case Solvability::unsolvable:
      return "unsolvable";
    case Solvability::resource_exceeded:
      return "resource-exceeded";
  }
  return "unsolvable";
}

bool ExponentClass::contains(u64 exponent) const {
  if (kind == Kind::exact) return exponent == representative;
  return exponent >= floor && exponent % period == representative % period;
}

u64 residue_of(const ExponentialEquation& eq, const Assignment& assignment, u64 m) {
  u64 sum = 0;
  for (const auto& t : eq.terms()) {
    u64 v = reduce(t.coefficient(), m);
    for (const auto& f : t.factors()) {
      v = mul_mod(v, pow_mod(reduce(f.base, m), assignment.at(f.variable), m), m);
    }
    sum = add_mod(sum, v, m);
  }
  return sum;
}

namespace {

// Sorted, duplicate-free residues.
using ResidueSet = std::vector<u64>;

// Above this many entries an enumeration table is considered unaffordable.
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 28;
// Moduli up to this size combine sets through a dense bitmap.
constexpr u64 kBitmapLimit = u64{1} << 27;
constexpr std::size_t kChunk = std::size_t{1} << 22;

class PairBudget {
 public:
  explicit PairBudget(u64 limit) : limit_(limit) {}

  void charge(u64 a, u64 b) {
    u128 n = static_cast<u128>(a) * b;
    if (n > limit_ - used_) {
      used_ = limit_;
      throw ResourceExceeded("pair enumeration budget of " + std::to_string(limit_) +
                             " exhausted");
    }
    used_ += static_cast<u64>(n);
  }

  u64 used() const { return used_; }

 private:
  u64 limit_;
  u64 used_ = 0;
};

void sort_unique(std::vector<u64>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const ResidueSet& s, u64 r) { return std::binary_search(s.begin(), s.end(), r); }

// { op(x, y) : x in a, y in b }
template <typename Op>
ResidueSet combine(const ResidueSet& a, const ResidueSet& b, u64 m, PairBudget& budget, Op op) {
  budget.charge(a.size(), b.size());
  u128 pairs = static_cast<u128>(a.size()) * b.size();
  ResidueSet out;
  if (m <= kBitmapLimit && pairs >= m / 64) {
    std::vector<std::uint64_t> bits(m / 64 + 1, 0);
    for (u64 x : a) {
      for (u64 y : b) {
        u64 r = op(x, y);
        bits[r >> 6] |= std::uint64_t{1} << (r & 63);
      }
    }
    for (u64 w = 0; w < bits.size(); ++w) {
      for (std::uint64_t word = bits[w]; word != 0; word &= word - 1) {
        out.push_back(w * 64 + static_cast<u64>(std::countr_zero(word)));
      }
    }
    return out;
  }
  ResidueSet buffer;
  auto flush = [&] {
    sort_unique(buffer);
    ResidueSet merged;
    merged.reserve(out.size() + buffer.size());
    std::set_union(out.begin(), out.end(), buffer.begin(), buffer.end(),
                   std::back_inserter(merged));
    out.swap(merged);
    buffer.clear();
    if (out.size() > kMaxTableEntries) throw ResourceExceeded("residue table too large");
  };
  for (u64 x : a) {
    for (u64 y : b) buffer.push_back(op(x, y));
    if (buffer.size() >= kChunk) flush();
  }
  flush();
  return out;
}

// a + b through rotations of a bitmap of b: |a| * m / 64 word operations
// instead of |a| * |b| pair insertions.
ResidueSet rotated_sumset(const ResidueSet& a, const ResidueSet& b, u64 m) {
  const std::size_t words = m / 64 + 1;
  // Bit i and bit i + m are set for every i in b, so any window of m bits
  // starting below m reads b rotated.
  std::vector<std::uint64_t> doubled(2 * words + 2, 0);
  for (u64 y : b) {
    doubled[y >> 6] |= std::uint64_t{1} << (y & 63);
    doubled[(y + m) >> 6] |= std::uint64_t{1} << ((y + m) & 63);
  }
  std::vector<std::uint64_t> bits(words, 0);
  for (u64 x : a) {
    // r is in x + b iff bit r + m - x of `doubled` is set.
    u64 start = m - x;
    std::size_t w0 = start >> 6;
    unsigned shift = start & 63;
    if (shift == 0) {
      for (std::size_t w = 0; w < words; ++w) bits[w] |= doubled[w0 + w];
    } else {
      for (std::size_t w = 0; w < words; ++w) {
        bits[w] |= (doubled[w0 + w] >> shift) | (doubled[w0 + w + 1] << (64 - shift));
      }
    }
  }
  bits[words - 1] &= (std::uint64_t{1} << (m & 63)) - 1;
  ResidueSet out;
  for (std::size_t w = 0; w < words; ++w) {
    for (std::uint64_t word = bits[w]; word != 0; word &= word - 1) {
      out.push_back(w * 64 + static_cast<u64>(std::countr_zero(word)));
    }
  }
  return out;
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b, u64 m, PairBudget& budget) {
  const ResidueSet& small = a.size() <= b.size() ? a : b;
  const ResidueSet& large = a.size() <= b.size() ? b : a;
  if (m <= kBitmapLimit && large.size() >= m / 16) {
    budget.charge(small.size(), large.size());
    return rotated_sumset(small, large, m);
  }
  return combine(a, b, m, budget, [m](u64 x, u64 y) { return add_mod(x, y, m); });
}

ResidueSet productset(const ResidueSet& a, const ResidueSet& b, u64 m, PairBudget& budget) {
  return combine(a, b, m, budget, [m](u64 x, u64 y) { return mul_mod(x, y, m); });
}

struct TermShape {
  u64 coefficient = 0;
  std::vector<std::size_t> vars;  // indices into the variable list
};

// Everything the enumeration needs for one modulus.
class Instance {
 public:
  Instance(const ExponentialEquation& eq, u64 m) : m_(m) {
    for (const auto& t : eq.terms()) {
      TermShape shape{reduce(t.coefficient(), m), {}};
      for (const auto& f : t.factors()) {
        shape.vars.push_back(orbits_.size());
        term_of_.push_back(terms_.size());
        names_.push_back(f.variable);
        bases_.push_back(f.base);
        orbits_.push_back(power_orbit(f.base, m));
      }
      terms_.push_back(std::move(shape));
    }
  }

  u64 modulus() const { return m_; }
  const std::vector<TermShape>& terms() const { return terms_; }
  const std::vector<PowerOrbit>& orbits() const { return orbits_; }
  std::size_t term_of(std::size_t var) const { return term_of_[var]; }

  std::vector<VariableOrbitSummary> summary() const {
    std::vector<VariableOrbitSummary> out;
    for (std::size_t v = 0; v < orbits_.size(); ++v) {
      out.push_back({names_[v], bases_[v], orbits_[v].tail, orbits_[v].period});
    }
    return out;
  }

  const std::string& name(std::size_t var) const { return names_[var]; }

  // Residues the term can take with some variables pinned. `skip` is left out
  // of the product entirely.
  ResidueSet term_residues(std::size_t term, const std::vector<u64>& fixed, PairBudget& budget,
                           std::size_t skip = static_cast<std::size_t>(-1)) const {
    ResidueSet acc{terms_[term].coefficient};
    for (std::size_t v : terms_[term].vars) {
      if (v == skip) continue;
      if (fixed[v] != 0) {
        u64 r = orbits_[v].at(fixed[v]);
        for (auto& x : acc) x = mul_mod(x, r, m_);
        sort_unique(acc);
      } else {
        ResidueSet values = orbits_[v].residues;
        sort_unique(values);
        acc = productset(acc, values, m_, budget);
      }
    }
    return acc;
  }

  ResidueSet block_sums(const std::vector<std::size_t>& block, const std::vector<u64>& fixed,
                        PairBudget& budget,
                        std::size_t skip_term = static_cast<std::size_t>(-1)) const {
    ResidueSet acc{0};
    for (std::size_t t : block) {
      if (t == skip_term) continue;
      acc = sumset(acc, term_residues(t, fixed, budget), m_, budget);
    }
    return acc;
  }

 private:
  u64 m_;
  std::vector<TermShape> terms_;
  std::vector<PowerOrbit> orbits_;
  std::vector<std::size_t> term_of_;
  std::vector<std::string> names_;
  std::vector<i64> bases_;
};

// Does some x in xs, y in ys satisfy u + x + y = 0 (mod m)?
bool closes(u64 u, const ResidueSet& xs, const ResidueSet& ys, u64 m, PairBudget& budget) {
  const ResidueSet& small = xs.size() <= ys.size() ? xs : ys;
  const ResidueSet& large = xs.size() <= ys.size() ? ys : xs;
  budget.charge(small.size(), 1);
  for (u64 s : small) {
    if (contains(large, neg_mod(add_mod(u, s, m), m))) return true;
  }
  return false;
}

struct Partition {
  std::vector<std::size_t> a, b;
};

// Constants go to block A; the others, heaviest first, join whichever block
// currently has the smaller product of residue counts.
Partition partition_terms(const Instance& inst, const std::vector<ResidueSet>& term_sets) {
  Partition p;
  std::vector<std::size_t> order;
  for (std::size_t t = 0; t < inst.terms().size(); ++t) {
    if (inst.terms()[t].vars.empty()) {
      p.a.push_back(t);
    } else {
      order.push_back(t);
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return term_sets[x].size() > term_sets[y].size();
  });
  long double weight_a = 1, weight_b = 1;
  for (std::size_t t : order) {
    if (weight_a <= weight_b) {
      p.a.push_back(t);
      weight_a *= static_cast<long double>(term_sets[t].size());
    } else {
      p.b.push_back(t);
      weight_b *= static_cast<long double>(term_sets[t].size());
    }
  }
  std::sort(p.a.begin(), p.a.end());
  std::sort(p.b.begin(), p.b.end());
  return p;
}

// Lexicographically least exponent vector (variable order), each exponent the
// least member of its class. Requires the instance to be solvable.
std::vector<u64> least_witness(const Instance& inst, const Partition& part, PairBudget& budget) {
  const std::size_t nvars = inst.orbits().size();
  std::vector<u64> fixed(nvars, 0);
  auto block_of = [&](std::size_t term) -> std::pair<const std::vector<std::size_t>*,
                                                     const std::vector<std::size_t>*> {
    if (std::find(part.a.begin(), part.a.end(), term) != part.a.end()) return {&part.a, &part.b};
    return {&part.b, &part.a};
  };
  const u64 m = inst.modulus();
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t term = inst.term_of(v);
    auto [own, other] = block_of(term);
    ResidueSet other_sums = inst.block_sums(*other, fixed, budget);
    ResidueSet rest = inst.block_sums(*own, fixed, budget, term);
    ResidueSet partial = inst.term_residues(term, fixed, budget, v);
    // The variable's term must land on -s for some s in `reachable`.
    ResidueSet reachable = sumset(rest, other_sums, m, budget);
    const auto& orbit = inst.orbits()[v];
    budget.charge(orbit.class_count(), partial.size());
    for (u64 e = 1; e <= orbit.class_count() && fixed[v] == 0; ++e) {
      u64 rv = orbit.residues[e - 1];
      for (u64 f : partial) {
        if (contains(reachable, neg_mod(mul_mod(f, rv, m), m))) {
          fixed[v] = e;
          break;
        }
      }
    }
    if (fixed[v] == 0) throw std::logic_error("witness reconstruction found no exponent");
  }
  return fixed;
}

SolvabilityCertificate decide_single(const ExponentialEquation& eq, u64 m,
                                     const DecideOptions& options, PairBudget& budget) {
  SolvabilityCertificate cert(eq, m);
  cert.decided_modulus = m;
  Instance inst(eq, m);
  cert.orbits = inst.summary();

  std::vector<u64> none(inst.orbits().size(), 0);
  std::vector<ResidueSet> term_sets;
  for (std::size_t t = 0; t < inst.terms().size(); ++t) {
    term_sets.push_back(inst.term_residues(t, none, budget));
  }
  Partition part = partition_terms(inst, term_sets);
  cert.block_a = part.a;
  cert.block_b = part.b;

  auto fold = [&](const std::vector<std::size_t>& block) {
    ResidueSet acc{0};
    for (std::size_t t : block) acc = sumset(acc, term_sets[t], m, budget);
    return acc;
  };
  ResidueSet sums_a = fold(part.a);
  ResidueSet sums_b = fold(part.b);
  cert.block_a_residues = sums_a.size();
  cert.block_b_residues = sums_b.size();

  bool solvable = closes(0, sums_a, sums_b, m, budget);
  cert.status = solvable ? Solvability::solvable : Solvability::unsolvable;
  if (solvable && options.reconstruct_witness) {
    auto exps = least_witness(inst, part, budget);
    for (std::size_t v = 0; v < exps.size(); ++v) {
      const auto& orbit = inst.orbits()[v];
      ExponentClass cls{inst.name(v)};
      cls.representative = exps[v];
      if (exps[v] > orbit.tail) {
        cls.kind = ExponentClass::Kind::cyclic;
        cls.period = orbit.period;
        cls.floor = exps[v];
      }
      cert.witness.push_back(cls);
      cert.witness_exponents[inst.name(v)] = exps[v];
    }
    if (residue_of(eq, cert.witness_exponents, m) != 0) {
      throw std::logic_error("reconstructed witness does not satisfy the congruence");
    }
  }
  return cert;
}

}  // namespace

SolvabilityCertificate has_solution_mod(const ExponentialEquation& eq, u64 m,
                                        const DecideOptions& options) {
  check_modulus(m);
  PairBudget budget(options.max_pairs);
  try {
    if (options.prime_power_prefilter) {
      auto parts = factorize(m);
      if (parts.size() > 1) {
        DecideOptions inner = options;
        inner.reconstruct_witness = false;
        for (const auto& pp : parts) {
          auto cert = decide_single(eq, pp.value(), inner, budget);
          if (cert.status == Solvability::unsolvable) {
            cert.modulus = m;
            cert.pair_enumerations = budget.used();
            return cert;
          }
        }
      }
    }
    auto cert = decide_single(eq, m, options, budget);
    cert.pair_enumerations = budget.used();
    return cert;
  } catch (const ResourceExceeded& e) {
    SolvabilityCertificate cert(eq, m);
    cert.status = Solvability::resource_exceeded;
    cert.decided_modulus = m;
    cert.reason = e.what();
    cert.pair_enumerations = budget.used();
    return cert;
  }
}

u64 shrink_modulus(const ExponentialEquation& eq, u64 m, const DecideOptions& options) {
  DecideOptions quiet = options;
  quiet.reconstruct_witness = false;
  auto cert = has_solution_mod(eq, m, quiet);
  if (cert.status != Solvability::unsolvable) {
    throw std::invalid_argument("shrink_modulus needs an equation with no solution mod m");
  }
  u64 d = cert.decided_modulus;
  for (bool changed = true; changed;) {
    changed = false;
    auto parts = factorize(d);
    // Dropping the largest primes first tends to leave the smallest witness.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      u64 smaller = d / it->prime;
      if (smaller < 2) continue;
      auto sub = has_solution_mod(eq, smaller, quiet);
      if (sub.status == Solvability::unsolvable) {
        d = sub.decided_modulus;
        changed = true;
        break;
      }
    }
  }
  return d;
}

}  // namespace exposk
