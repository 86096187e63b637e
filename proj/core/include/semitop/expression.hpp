#pragma once

// Constructor expressions:
//
//   expr := "RB" "(" int "," int ")"      rectangular band
//         | "C"  "(" int ")"              cyclic group
//         | "S"  "(" int ")"              Moore semigroup S_n
//         | "M"  "(" int ")"              Moore monoid M_n
//         | "J"  "(" expr ")"             suspension monoid
//         | "W"  "(" expr "," expr ")"    wedge monoid
//         | "I"  "(" expr ")"             adjoin identity
//         | "Z"  "(" expr ")"             adjoin zero
//         | "P"  "(" expr "," expr ")"    direct product
//
// Whitespace is ignored.  Errors are reported as ParseError carrying the
// 0-based character offset.  Construction errors (for example J applied to a
// semigroup without identity) propagate unchanged.

#include <string_view>

#include "semitop/semigroup.hpp"

namespace semitop {

  FiniteSemigroup parse_expression(std::string_view text);

}  // namespace semitop
