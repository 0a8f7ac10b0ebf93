#include "exposk/intsearch.hpp"

#include <algorithm>
#include <unordered_map>

#include "exposk/modarith.hpp"

namespace exposk {

namespace {

struct TermValue {
  i128 value;
  std::vector<u64> exponents;  // one per factor
};

u64 magnitude(i64 v) { return v < 0 ? 0 - static_cast<u64>(v) : static_cast<u64>(v); }

// All (value, exponents) of one term with |value| <= limit.
std::vector<TermValue> term_values(const ExponentialTerm& t, u64 limit) {
  std::vector<TermValue> out;
  u64 c = magnitude(t.coefficient());
  if (c > limit) return out;
  std::vector<u64> exps(t.factors().size(), 0);
  // Depth-first over factors carrying the running magnitude and sign.
  auto rec = [&](auto&& self, std::size_t i, u64 mag, int sign) -> void {
    if (i == t.factors().size()) {
      out.push_back({static_cast<i128>(mag) * sign, exps});
      return;
    }
    i64 base = t.factors()[i].base;
    u64 b = magnitude(base);
    u64 cur = mag;
    int s = sign;
    for (u64 e = 1;; ++e) {
      if (static_cast<u128>(cur) * b > limit) break;
      cur *= b;
      if (base < 0) s = -s;
      exps[i] = e;
      self(self, i + 1, cur, s);
    }
  };
  rec(rec, 0, c, t.coefficient() < 0 ? -1 : 1);
  return out;
}

}  // namespace

std::vector<std::uint64_t> exponent_vector(const ExponentialEquation& eq, const Assignment& a) {
  std::vector<std::uint64_t> out;
  for (const auto& v : eq.variables()) out.push_back(a.at(v));
  return out;
}

std::vector<Assignment> brute_force_solutions(const ExponentialEquation& eq,
                                              const SearchBound& bound) {
  if (bound.max_value < 2 || bound.max_value > (u64{1} << 62)) {
    throw ModelError("search bound must lie in [2, 2^62]");
  }
  for (const auto& t : eq.terms()) {
    for (const auto& f : t.factors()) {
      if (magnitude(f.base) <= 1) {
        throw ModelError("base " + std::to_string(f.base) + " gives an unbounded exponent range");
      }
    }
  }

  const auto& terms = eq.terms();
  std::vector<std::vector<TermValue>> values;
  for (const auto& t : terms) {
    values.push_back(term_values(t, bound.max_value));
    if (values.back().empty()) return {};
  }

  // Fewest options first (largest bases); the last term is matched by lookup.
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a].size() < values[b].size();
  });

  const std::size_t k = order.size();
  std::vector<i128> suffix_min(k + 1, 0), suffix_max(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    const auto& vs = values[order[i]];
    i128 lo = vs.front().value, hi = vs.front().value;
    for (const auto& tv : vs) {
      lo = std::min(lo, tv.value);
      hi = std::max(hi, tv.value);
    }
    suffix_min[i] = suffix_min[i + 1] + lo;
    suffix_max[i] = suffix_max[i + 1] + hi;
  }

  // value -> indices into the last term's options
  std::unordered_map<std::int64_t, std::vector<std::size_t>> last_lookup;
  const auto& last = values[order[k - 1]];
  for (std::size_t i = 0; i < last.size(); ++i) {
    last_lookup[static_cast<std::int64_t>(last[i].value)].push_back(i);
  }

  std::vector<std::size_t> choice(k, 0);
  std::vector<Assignment> found;
  auto emit = [&](std::size_t last_index) {
    Assignment a;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t term = order[i];
      const auto& tv = values[term][i + 1 == k ? last_index : choice[i]];
      for (std::size_t f = 0; f < terms[term].factors().size(); ++f) {
        a[terms[term].factors()[f].variable] = tv.exponents[f];
      }
    }
    if (evaluate_equation(eq, a) != 0) {
      throw std::logic_error("search produced a non-solution");
    }
    found.push_back(std::move(a));
  };
  auto rec = [&](auto&& self, std::size_t i, i128 partial) -> void {
    if (partial + suffix_min[i] > 0 || partial + suffix_max[i] < 0) return;
    if (i + 1 == k) {
      i128 need = -partial;
      auto it = last_lookup.find(static_cast<std::int64_t>(need));
      if (it != last_lookup.end() && need == static_cast<std::int64_t>(need)) {
        for (std::size_t idx : it->second) emit(idx);
      }
      return;
    }
    const auto& vs = values[order[i]];
    for (std::size_t j = 0; j < vs.size(); ++j) {
      choice[i] = j;
      self(self, i + 1, partial + vs[j].value);
    }
  };
  rec(rec, 0, 0);

  std::sort(found.begin(), found.end(), [&](const Assignment& a, const Assignment& b) {
    return exponent_vector(eq, a) < exponent_vector(eq, b);
  });
  return found;
}

std::map<std::int64_t, std::vector<Assignment>> family_solution_table(const SignPattern& delta,
                                                                      std::int64_t n_from,
                                                                      std::int64_t n_to,
                                                                      const SearchBound& bound) {
  std::map<std::int64_t, std::vector<Assignment>> table;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    table[n] = brute_force_solutions(family_equation({n, delta}), bound);
  }
  return table;
}

}  // namespace exposk
