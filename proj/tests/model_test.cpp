#include <doctest.h>

#include "exposk/model.hpp"

using namespace exposk;

namespace {

std::vector<std::pair<std::int64_t, std::string>> shape(const ExponentialEquation& eq) {
  std::vector<std::pair<std::int64_t, std::string>> out;
  for (const auto& t : eq.terms()) {
    std::string f;
    for (const auto& p : t.factors()) f += std::to_string(p.base) + "^" + p.variable + " ";
    out.emplace_back(t.coefficient(), f);
  }
  return out;
}

}  // namespace

TEST_CASE("family equation terms") {
  auto eq = family_equation({2, {-1, -1, -1}});
  CHECK(shape(eq) == std::vector<std::pair<std::int64_t, std::string>>{
                         {1, "2^x "}, {-1, "3^y "}, {-1, "4^z "}, {-1, "5^w "}});
  auto eq3 = family_equation({3, {1, 1, -1}});
  CHECK(shape(eq3) == std::vector<std::pair<std::int64_t, std::string>>{
                          {1, "3^x "}, {1, "4^y "}, {1, "5^z "}, {-1, "6^w "}});
  CHECK(eq.variables() == std::vector<std::string>{"x", "y", "z", "w"});
}

TEST_CASE("family rejects n below 2 and the all-positive pattern") {
  CHECK_THROWS_AS(family_equation({1, {-1, -1, -1}}), ModelError);
  CHECK_THROWS_AS(family_equation({0, {1, -1, 1}}), ModelError);
  CHECK_THROWS_AS(family_equation({5, {1, 1, 1}}), ModelError);
  CHECK_THROWS_AS(family_equation({5, {2, 1, 1}}), ModelError);
}

TEST_CASE("term and equation invariants") {
  CHECK_THROWS_AS(ExponentialTerm(0, {{2, "x"}}), ModelError);
  CHECK_THROWS_AS(ExponentialTerm(1, {{1, "x"}}), ModelError);
  CHECK_THROWS_AS(ExponentialTerm(1, {{0, "x"}}), ModelError);
  CHECK_NOTHROW(ExponentialTerm(1, {{-1, "x"}}));
  CHECK_THROWS_AS(ExponentialEquation({}), ModelError);
  CHECK_THROWS_AS(ExponentialEquation({ExponentialTerm(1, {{2, "x"}}),
                                       ExponentialTerm(1, {{3, "x"}})}),
                  ModelError);
  CHECK_THROWS_AS(ExponentialEquation({ExponentialTerm(1, {{2, "x"}, {3, "x"}})}), ModelError);
  CHECK_NOTHROW(ExponentialEquation({ExponentialTerm(-3, {})}));
}

TEST_CASE("exact evaluation") {
  CHECK(evaluate_term(ExponentialTerm(-1, {{5, "w"}}), {{"w", 2}}) == -25);
  CHECK(evaluate_term(ExponentialTerm(1, {{2, "x"}}), {{"x", 5}}) == 32);
  CHECK(evaluate_term(ExponentialTerm(3, {{2, "a"}, {7, "b"}}), {{"a", 2}, {"b", 1}}) == 84);
  CHECK(evaluate_term(ExponentialTerm(1, {{-2, "x"}}), {{"x", 3}}) == -8);

  auto n2 = family_equation({2, {-1, -1, -1}});
  CHECK(evaluate_equation(n2, {{"x", 5}, {"y", 1}, {"z", 1}, {"w", 2}}) == 0);
  auto n3 = family_equation({3, {-1, -1, -1}});
  CHECK(evaluate_equation(n3, {{"x", 3}, {"y", 2}, {"z", 1}, {"w", 1}}) == 0);
  CHECK(evaluate_equation(n3, {{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}}) == -12);

  // Far beyond 64 bits.
  BigInt big = evaluate_term(ExponentialTerm(1, {{3, "x"}}), {{"x", 100}});
  BigInt expect = 1;
  for (int i = 0; i < 100; ++i) expect *= 3;
  CHECK(big == expect);

  CHECK_THROWS_AS(evaluate_equation(n3, {{"x", 1}}), ModelError);
  CHECK_THROWS_AS(evaluate_equation(n3, {{"x", 0}, {"y", 1}, {"z", 1}, {"w", 1}}), ModelError);
}

TEST_CASE("sign patterns") {
  CHECK(all_sign_patterns().size() == 7);
  for (const auto& p : all_sign_patterns()) {
    CHECK(parse_pattern(pattern_string(p)) == p);
    CHECK(p != SignPattern{1, 1, 1});
  }
  CHECK(parse_pattern("---") == SignPattern{-1, -1, -1});
  CHECK(parse_pattern("+-+") == SignPattern{1, -1, 1});
  CHECK_THROWS_AS(parse_pattern("+-"), ModelError);
  CHECK_THROWS_AS(parse_pattern("+*-"), ModelError);
}
