#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ginv/gamma_algebra.hpp"

namespace ginv {

/// Syntax or validation error with source position and the token set the
/// parser would have accepted.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_, column_;
  std::string expected_, found_;
};

/// Grammar of a decorated gamma-factor file:
///
///   expr       := "omega" "=" phase ";" "Q" "=" posreal ";" factor* [decoration]
///   factor     := "G(" rat "*s" ("+" | "-") gauss ")" [";"]
///   phase      := "tag" ["*" twistterm ("*" twistterm)*]
///   twistterm  := posrat ["^" rat] | "pi" ["^" rat]
///   posreal    := term ("*" term)* ;  term := posrat ["^" rat] | "pi" ["^" rat]
///   rat        := ["-"] integer ["/" positive-integer]
///   gauss      := rat | rat "i" | rat ("+"|"-") rat "i"
///   decoration := "R:" "kappa=" ["-"] posreal ";" "roots=[" gauss,* "];"
///                 "poles=[" gauss,* "]"
///
/// Data constraints (lambda > 0, Re(mu) >= 0) are validated during parsing
/// and reported as diagnostics with positions.
DecoratedGamma parse_decorated(std::string_view text);

/// Canonical form: deterministic, parses back to the identical value. The
/// trivial decoration is omitted.
std::string print_decorated(const DecoratedGamma& g);

/// Move scripts: comma-separated
///   expand(j) | contract(j) | split(j,m) | merge(j..k,m)
/// with zero-based indices into the current factor list. Merge index sets are
/// written (and required) as contiguous ranges j..k with k-j+1 = m.
MoveTrace parse_trace(std::string_view script);

/// Canonical script text; empty trace prints as "".
std::string print_trace(const MoveTrace& trace);

std::string print_move(const Move& move);

}  // namespace ginv
