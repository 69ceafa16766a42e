#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "derivcalc/derivation.hpp"
#include "derivcalc/diffop.hpp"
#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

// Expression grammar (whitespace is insignificant):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := atom ['^' nonneg-int] | '-' factor
//   atom     := rational | 't' index | '(' expr ')'
//   rational := int ['/' positive-int]
//
// Operator literals extend atoms with d[j1,...,jk] for the partial
// derivative d^j; '*' between operators is composition and a scalar c
// stands for c times the identity. Derivation literals are
// "t1 -> g1; t2 -> g2" (',' also separates), optionally parenthesized;
// generators not listed map to 0. Words compose derivation literals with
// 'o', may be prefixed by scalar factors, may use "id" for the empty word,
// and are summed with '+' / '-'.
//
// All parse functions throw ParseError with the byte offset of the problem.

RatFunc parse_expr(std::string_view text, std::size_t nvars);
DiffOp parse_diffop(std::string_view text, std::size_t nvars);
Derivation parse_derivation(std::string_view text, std::size_t nvars);
OpWord parse_word(std::string_view text, std::size_t nvars);

/// Expressions separated by ';' or ','. Empty input gives an empty list.
std::vector<RatFunc> parse_expr_list(std::string_view text, std::size_t nvars);

}  // namespace derivcalc
