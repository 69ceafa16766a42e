#pragma once

#include <string_view>

#include "derivcalc/parser.hpp"

namespace derivcalc::testing {

inline RatFunc expr(std::string_view text, std::size_t k = 1) { return parse_expr(text, k); }
inline DiffOp op(std::string_view text, std::size_t k = 1) { return parse_diffop(text, k); }
inline Derivation deriv(std::string_view text, std::size_t k = 1) { return parse_derivation(text, k); }

}  // namespace derivcalc::testing
