#pragma once

#include <stdexcept>
#include <string>

#include "setj/formula.hpp"

namespace setj {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Text grammar:
//   formula := disjunct ('->' formula)?                  (right associative)
//   disjunct := conjunct ('|' conjunct)*
//   conjunct := unary ('&' unary)*
//   unary := '~' unary | quantifier | '(' formula ')' | 'T' | 'F' | atom
//   quantifier := ('A'|'E') var ('in' term)? ':' formula (scope extends right)
//   atom := term ('in' | '=') term
//   term := var | 'j' '(' term ')' | 'j' '^' nat '(' var ')' | '#' nat
//         | 'kappa' | 'Vkappa' | 'omega'
// Variables named v<k> map to index k; other identifiers are assigned fresh
// indices in order of first appearance. j(j(x)) folds to j^2(x); j applied
// to anything but a variable or constant is rejected.
FormulaPtr parse(const std::string& text);

// Canonical s-expression reader (inverse of print_sexpr).
FormulaPtr parse_sexpr(const std::string& text);

// Dispatches on a leading '(' to parse_sexpr, otherwise parse.
FormulaPtr parse_any(const std::string& text);

}  // namespace setj
