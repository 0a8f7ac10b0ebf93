#include <doctest.h>

#include "exposk/congruence.hpp"
#include "exposk/intsearch.hpp"
#include "exposk/lemmas.hpp"
#include "exposk/witness.hpp"

using namespace exposk;

namespace {

using Lists = std::vector<std::vector<Constraint>>;

const SignPattern kAllNegative{-1, -1, -1};

Lists lists(const CaseDisjunction& d) {
  Lists out;
  for (const auto& c : d.cases) out.push_back(c.constraints);
  return out;
}

ParityOf odd(const char* v) { return {v, Parity::odd}; }
ParityOf even(const char* v) { return {v, Parity::even}; }

// Hand-written case lists for the all-negative pattern once x >= 2 is known.
Lists expected_mod3(std::int64_t n) {
  switch (n % 3) {
    case 0: return {{odd("z")}};
    case 1: return {{Contradiction{}}};
    default: return {{odd("x"), even("w")}};
  }
}

Lists expected_mod4(std::int64_t n) {
  if (n % 8 == 0) return {{VarEquals{"z", 2}, odd("w")}};
  switch (n % 4) {
    case 0: return {{odd("w"), VarGreater{"z", 1}}, {even("w"), VarEquals{"z", 1}}};
    case 1: return {{even("z"), VarGreater{"y", 1}}, {odd("z"), VarEquals{"y", 1}}};
    case 2: return {{odd("y")}};
    default: return {{even("x"), VarGreater{"w", 1}}, {odd("x"), VarEquals{"w", 1}}};
  }
}

Lists expected_nplus1() {
  using T = NOddFactorForm::Twist;
  return {{even("x"), NIsPow2Minus{1}},
          {odd("x"), VarEquals{"w", 1}, NPlusDivides{1, -4}},
          {odd("x"), VarGreater{"w", 1}, NOddFactorForm{1, 1, 1, "w", T::none}},
          {odd("x"), VarGreater{"w", 1}, NOddFactorForm{1, 2, 1, "w", T::none}}};
}

Lists expected_nplus2() {
  using T = NOddFactorForm::Twist;
  return {{odd("y"), NIsPow2Minus{2}},
          {even("y"), NOddFactorForm{2, 1, -1, "x", T::alternating}},
          {even("y"), NOddFactorForm{2, 2, -1, "x", T::alternating}}};
}

}  // namespace

TEST_CASE("mod 3 generator") {
  CHECK(lists(mod3_constraints(kAllNegative, 9)) == Lists{{odd("z")}});
  CHECK(lists(mod3_constraints(kAllNegative, 10)) == Lists{{Contradiction{}}});
  CHECK(lists(mod3_constraints({1, -1, -1}, 5)) == Lists{{odd("x"), even("w")}});
  CHECK(lists(mod3_constraints({1, 1, -1}, 4)) == Lists{{Contradiction{}}});
  CHECK(lists(mod3_constraints({1, -1, 1}, 4)) == Lists{{even("y")}});
  CHECK(mod3_constraints(kAllNegative, 9).source == "mod-3");
}

TEST_CASE("mod 4 generator") {
  CHECK(lists(mod4_constraints(kAllNegative, 8)) == Lists{{VarEquals{"z", 2}, odd("w")}});
  CHECK(lists(mod4_constraints(kAllNegative, 6)) ==
        Lists{{odd("y"), VarGreater{"x", 1}}, {even("y"), VarEquals{"x", 1}}});
  // (-1)^x = -delta2 when w > 1; the n = 3 solution (3,1,1,2) has x odd, w = 2.
  CHECK(lists(mod4_constraints({1, 1, -1}, 7)) ==
        Lists{{odd("x"), VarGreater{"w", 1}}, {even("x"), VarEquals{"w", 1}}});
}

TEST_CASE("mod n+1 and n+2 generators") {
  auto d1 = mod_nplus1_constraints(kAllNegative, 4);
  CHECK(d1.source == "mod-n+1");
  CHECK(lists(d1) == expected_nplus1());
  // Case (ii) of a pattern with delta2 + delta3 = 0 is unconstrained in n.
  auto mixed = mod_nplus1_constraints({1, 1, -1}, 11);
  CHECK(std::get<NPlusDivides>(mixed.cases[1].constraints[2]) == NPlusDivides{1, 0});
  CHECK(evaluate(NPlusDivides{1, 0}, 11, {}));

  auto d2 = mod_nplus2_constraints(kAllNegative, 6);
  CHECK(d2.source == "mod-n+2");
  CHECK(d2.cases.size() == 4);
  CHECK(evaluate(d2.cases[0].constraints[1], 6, {}));
}

TEST_CASE("all-negative specialization") {
  for (std::int64_t n = 3; n <= 400; ++n) {
    INFO("n=" << n);
    auto trace = deduction_trace(kAllNegative, n);
    REQUIRE(trace.size() == 5);
    CHECK(trace[4].source == "x-at-least-2");
    CHECK(lists(assume_x_at_least_2(trace[0])) == expected_mod3(n));
    CHECK(lists(assume_x_at_least_2(trace[1])) == expected_mod4(n));
    CHECK(lists(assume_x_at_least_2(trace[2])) == expected_nplus1());
    CHECK(lists(assume_x_at_least_2(trace[3])) == expected_nplus2());
    // Case (ii) of the n+1 reduction pins n to 3.
    CHECK(evaluate(NPlusDivides{1, -4}, n, {}) == (n == 3));
  }
  CHECK(deduction_trace(kAllNegative, 2).size() == 4);
}

TEST_CASE("constraint evaluation") {
  Assignment sol{{"x", 3}, {"y", 2}, {"z", 1}, {"w", 1}};
  CHECK(evaluate(odd("z"), 3, sol));
  CHECK_FALSE(evaluate(even("z"), 3, sol));
  CHECK(evaluate(NIsPow2Minus{2}, 6, {}));
  CHECK(evaluate(NIsPow2Minus{1}, 7, {}));
  CHECK(evaluate(NIsPow2Minus{2}, 2, {}));
  CHECK_FALSE(evaluate(NIsPow2Minus{1}, 1, {}));
  CHECK_FALSE(evaluate(NIsPow2Minus{1}, 5, {}));
  CHECK(evaluate(NPlusDivides{1, 4}, 3, {}));
  CHECK_FALSE(evaluate(NPlusDivides{1, 4}, 4, {}));
  CHECK_FALSE(evaluate(Contradiction{}, 5, sol));

  using T = NOddFactorForm::Twist;
  // n = 4, f = 5, w = 3: 5 | 2^2 + 1.
  CHECK(evaluate(NOddFactorForm{1, 1, 1, "w", T::none}, 4, {{"w", 3}}));
  CHECK_FALSE(evaluate(NOddFactorForm{1, 1, 1, "w", T::none}, 4, {{"w", 4}}));
  // n = 3, g = 5, x = 3: 5 | 2^2 - (-1)^3.
  CHECK(evaluate(NOddFactorForm{2, 1, -1, "x", T::alternating}, 3, {{"x", 3}}));
  // n + offset even with multiplier 1 never matches.
  CHECK_FALSE(evaluate(NOddFactorForm{1, 1, 1, "w", T::none}, 5, {{"w", 3}}));
  // Exponents beyond 64 use the direct route only.
  CHECK(evaluate(NOddFactorForm{1, 1, 1, "w", T::none}, 2, {{"w", 102}}));
  CHECK_FALSE(evaluate(NOddFactorForm{1, 1, 1, "w", T::none}, 2, {{"w", 101}}));
  CHECK_THROWS_AS(evaluate(odd("q"), 3, sol), ModelError);
}

TEST_CASE("soundness on small searches") {
  for (const auto& d : all_sign_patterns()) {
    for (std::int64_t n = 2; n <= 20; ++n) {
      auto eq = family_equation({n, d});
      for (const auto& s : brute_force_solutions(eq, {100'000'000})) {
        for (const auto& disj : deduction_trace(d, n)) {
          INFO(pattern_string(d) << " n=" << n << " " << disj.source);
          CHECK_FALSE(satisfied_cases(disj, n, s).empty());
        }
      }
    }
  }
}

TEST_CASE("classifier") {
  auto v = classify(kAllNegative, 7);
  CHECK(v.status == TheoremVerdict::Status::no_solution_proved);
  CHECK(v.complete);
  CHECK(v.citation == "all-negative-pattern");

  v = classify(kAllNegative, 2);
  CHECK(v.status == TheoremVerdict::Status::known_solutions);
  CHECK(v.solutions == std::vector<FamilySolution>{{5, 1, 1, 2}});

  v = classify({1, 1, -1}, 20);
  CHECK(v.status == TheoremVerdict::Status::no_solution_proved);

  v = classify({1, -1, 1}, 9);
  CHECK(v.status == TheoremVerdict::Status::known_solutions);
  CHECK(v.solutions == std::vector<FamilySolution>{{1, 2, 2, 1}});
  CHECK_FALSE(v.complete);

  v = classify({1, -1, -1}, 2);
  CHECK(v.solutions == std::vector<FamilySolution>{{1, 3, 1, 2}, {3, 4, 3, 2}, {5, 2, 2, 2}});
  CHECK(v.complete);

  v = classify({-1, 1, 1}, 4);
  CHECK(v.status == TheoremVerdict::Status::not_covered);
  CHECK(to_string(v.status) == "not-covered");
}

TEST_CASE("classifier agrees with search and with the family modulus") {
  for (const auto& d : all_sign_patterns()) {
    for (std::int64_t n = 2; n <= 50; ++n) {
      auto v = classify(d, n);
      if (v.status == TheoremVerdict::Status::not_covered) continue;
      auto eq = family_equation({n, d});
      std::vector<FamilySolution> found;
      for (const auto& s : brute_force_solutions(eq, {10'000'000'000})) {
        found.push_back({s.at("x"), s.at("y"), s.at("z"), s.at("w")});
      }
      INFO(pattern_string(d) << " n=" << n);
      if (v.complete) {
        CHECK(found == v.solutions);
      } else {
        for (const auto& s : v.solutions) {
          CHECK(std::find(found.begin(), found.end(), s) != found.end());
        }
      }
    }
  }
  for (std::int64_t n = 4; n <= 200; ++n) {
    bool none = classify(kAllNegative, n).status == TheoremVerdict::Status::no_solution_proved;
    auto cert = has_solution_mod(family_equation({n, kAllNegative}), family_modulus(n));
    CHECK(none == (cert.status == Solvability::unsolvable));
  }
}

TEST_CASE("descriptions") {
  using T = NOddFactorForm::Twist;
  CHECK(describe(odd("x")) == "x odd");
  CHECK(describe(VarGreater{"w", 1}) == "w > 1");
  CHECK(describe(NPlusDivides{1, -4}) == "(n+1) | -4");
  CHECK(describe(NOddFactorForm{2, 2, -1, "x", T::alternating}) ==
        "n = 2h - 2, h odd, h | 2^(x-1) - (-1)^x");
}
