#pragma once

#include <string>

#include "homore/ore.hpp"

namespace homore {

// Parses the textual form of an Ore polynomial, the same coefficient-major
// format to_string() emits.
//
//   orepoly := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := INT ['/' INT] | PARAM | 'Y' ['^' NAT] | 'X' ['^' NAT]
//            | '(' orepoly ')'
//
// Terms are coefficient-major: within a term the X part comes last, so once a
// factor containing X has been consumed only constant factors may follow.
// PARAM names resolve against the ring's parameter list and are only valid
// for parameter-polynomial rings. Throws parse_error with the offending
// offset on malformed input; round-trips exactly with OrePoly::to_string().
OrePoly parse_ore_poly(const std::string& text, const Ring& ring);

}  // namespace homore
