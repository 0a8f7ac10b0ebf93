#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exposk/model.hpp"

namespace exposk {

enum class ParseErrorKind { syntax, bad_base, zero_coefficient, duplicate_variable };

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  // Character offset into the input, never past its end.
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Parses `lhs = rhs`. The right side is negated and appended to the left,
/// so the result reads "sum of terms = 0".
///
/// Grammar (whitespace between tokens ignored):
///   equation := expr "=" expr
///   expr     := ["-"] term { ("+"|"-") term }
///   term     := integer [ "*" powprod ] | powprod
///   powprod  := power { "*" power }
///   power    := base "^" ident
///   base     := integer | "(" "-" integer ")"
ExponentialEquation parse_equation(std::string_view text);

/// Canonical one-line form, e.g. "2^x - 3^y - 4^z - 5^w = 0".
std::string format_equation(const ExponentialEquation& eq);

/// The family as conventionally displayed: positive terms on the left,
/// negative terms on the right, e.g. "2^x = 3^y + 4^z + 5^w".
std::string format_family_display(const FamilyPattern& p);

/// Terms sorted by their factor lists so that equal equations written in a
/// different term order compare equal.
ExponentialEquation normalized(const ExponentialEquation& eq);

/// Reads an equation file: one equation per line, '#' starts a comment,
/// blank lines skipped. Parse errors carry the offset within their line.
struct EquationLine {
  std::size_t line_number = 0;
  std::string text;
};
std::vector<EquationLine> read_equation_lines(std::string_view contents);

}  // namespace exposk
