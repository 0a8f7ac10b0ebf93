#include "exposk/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace exposk {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::syntax:
      return "syntax";
    case ParseErrorKind::bad_base:
      return "bad-base";
    case ParseErrorKind::zero_coefficient:
      return "zero-coefficient";
    case ParseErrorKind::duplicate_variable:
      return "duplicate-variable";
  }
  return "syntax";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message), kind_(kind), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExponentialEquation parse() {
    auto terms = parse_expr();
    skip_ws();
    if (!consume('=')) fail("expected '='");
    auto rhs = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    for (auto& t : rhs) {
      terms.emplace_back(-t.coefficient(), t.factors());
    }
    if (terms.empty()) fail_at(0, "equation has no terms");
    return ExponentialEquation(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         ParseErrorKind kind = ParseErrorKind::syntax) const {
    fail_at(pos_, what, kind);
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what,
                            ParseErrorKind kind = ParseErrorKind::syntax) const {
    at = std::min(at, text_.size());
    throw ParseError(kind, at, what + " at offset " + std::to_string(at));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail_at(start, "integer out of range");
    return value;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected variable name");
    }
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!seen_.insert(name).second) {
      fail_at(start, "variable '" + name + "' occurs more than once",
              ParseErrorKind::duplicate_variable);
    }
    return name;
  }

  // base "^" ident, where an unparenthesized integer base has already been read.
  PowerFactor finish_power(std::int64_t base, std::size_t base_at) {
    if (base == 0 || base == 1) {
      fail_at(base_at, "base " + std::to_string(base) + " is not allowed",
              ParseErrorKind::bad_base);
    }
    if (!consume('^')) fail("expected '^'");
    return PowerFactor{base, parse_ident()};
  }

  PowerFactor parse_power() {
    skip_ws();
    std::size_t at = pos_;
    std::int64_t base = 0;
    if (consume('(')) {
      if (!consume('-')) fail("expected '-' inside parenthesized base");
      base = -parse_integer();
      if (!consume(')')) fail("expected ')'");
    } else {
      base = parse_integer();
    }
    return finish_power(base, at);
  }

  std::vector<PowerFactor> parse_powprod_tail(std::vector<PowerFactor> factors) {
    while (consume('*')) factors.push_back(parse_power());
    return factors;
  }

  ExponentialTerm parse_term(int sign) {
    skip_ws();
    std::size_t at = pos_;
    if (peek_digit()) {
      std::int64_t value = parse_integer();
      if (peek('^')) {
        auto factors = parse_powprod_tail({finish_power(value, at)});
        return ExponentialTerm(sign, std::move(factors));
      }
      if (value == 0) {
        fail_at(at, "coefficient must be nonzero", ParseErrorKind::zero_coefficient);
      }
      if (consume('*')) {
        auto factors = parse_powprod_tail({parse_power()});
        return ExponentialTerm(sign * value, std::move(factors));
      }
      return ExponentialTerm(sign * value, {});
    }
    if (peek('(')) {
      auto factors = parse_powprod_tail({parse_power()});
      return ExponentialTerm(sign, std::move(factors));
    }
    fail("expected term");
  }

  // A side consisting of the single literal 0 is the empty sum.
  bool parse_zero_side() {
    skip_ws();
    std::size_t save = pos_;
    if (peek_digit() && parse_integer() == 0) {
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] == '=') return true;
    }
    pos_ = save;
    return false;
  }

  std::vector<ExponentialTerm> parse_expr() {
    std::vector<ExponentialTerm> terms;
    if (parse_zero_side()) return terms;
    int sign = consume('-') ? -1 : 1;
    terms.push_back(parse_term(sign));
    for (;;) {
      if (consume('+')) {
        terms.push_back(parse_term(1));
      } else if (consume('-')) {
        terms.push_back(parse_term(-1));
      } else {
        break;
      }
    }
    return terms;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> seen_;
};

void append_term(std::ostringstream& out, const ExponentialTerm& t, bool first) {
  std::int64_t c = t.coefficient();
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  // Magnitude via unsigned arithmetic so INT64_MIN prints correctly.
  std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
  if (t.is_constant()) {
    out << mag;
    return;
  }
  if (mag != 1) out << mag << '*';
  bool first_factor = true;
  for (const auto& f : t.factors()) {
    if (!first_factor) out << '*';
    first_factor = false;
    if (f.base < 0) {
      out << "(-" << (0 - static_cast<std::uint64_t>(f.base)) << ')';
    } else {
      out << f.base;
    }
    out << '^' << f.variable;
  }
}

}  // namespace

ExponentialEquation parse_equation(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const ModelError& e) {
    // Residual model invariant violations surface as syntax errors.
    throw ParseError(ParseErrorKind::syntax, text.size(), e.what());
  }
}

std::string format_equation(const ExponentialEquation& eq) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : eq.terms()) {
    append_term(out, t, first);
    first = false;
  }
  out << " = 0";
  return out.str();
}

std::string format_family_display(const FamilyPattern& p) {
  auto eq = family_equation(p);
  std::vector<ExponentialTerm> left, right;
  for (const auto& t : eq.terms()) {
    if (t.coefficient() > 0) {
      left.push_back(t);
    } else {
      right.emplace_back(-t.coefficient(), t.factors());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < left.size(); ++i) append_term(out, left[i], i == 0);
  out << " = ";
  for (std::size_t i = 0; i < right.size(); ++i) append_term(out, right[i], i == 0);
  return out.str();
}

ExponentialEquation normalized(const ExponentialEquation& eq) {
  auto terms = eq.terms();
  auto key = [](const ExponentialTerm& t) {
    std::vector<std::pair<std::string, std::int64_t>> k;
    for (const auto& f : t.factors()) k.emplace_back(f.variable, f.base);
    return std::make_pair(k, t.coefficient());
  };
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return ExponentialEquation(std::move(terms));
}

std::vector<EquationLine> read_equation_lines(std::string_view contents) {
  std::vector<EquationLine> out;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    ++line_number;
    std::string_view line = contents.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back({line_number, std::string(line)});
    if (end == contents.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace exposk
