#pragma once

// Text grammars for words, braids, tuples and bar cycles.
//
//   word   := { x<k> [^<int>] }             empty text is the identity
//   braid  := { atom [^<int>] }             atom := s<k> | A(i,j) | twist(k) | twist(i,j)
//   tuple  := braid { ; braid }
//   cycle  := torus:<braid> { | <braid> }   the element list may be wrapped in double quotes
//           | cross:<torus> { * <torus> }
//
// Errors are ParseError with the 0-based column of the offending character.

#include <string_view>
#include <vector>

#include "chains.hpp"

namespace tmm {

FreeWord parse_word(std::string_view text, int n);
BraidWord parse_braid(std::string_view text, int n);
std::vector<BraidWord> parse_tuple(std::string_view text, int n);
BarChain parse_cycle(std::string_view text, int n);

}  // namespace tmm
