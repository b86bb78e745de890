#pragma once

#include <string>
#include <vector>

#include "simpend/ordmap.hpp"
#include "simpend/presentation.hpp"

namespace simpend {

// Reads the dotted term grammar
//
//   term  :=  atom ("." atom)*
//   atom  :=  "1"  |  letter INDEX  |  letter "[" INDEX "," INDEX "]"
//
// with letter "p" or "q". Atoms chain left to right into left-nested
// compositions, leftmost applied last; "x[i,j]" with i >= j is the
// descending chain x^i o x^{i-1} o ... o x^j. No whitespace. ParseError
// carries the byte offset of the complaint; indices outside the rank
// throw IndexError.
Term parse_term(const std::string& text, int n);

// The same grammar back out: blocks always bracketed, "1" when empty.
std::string to_string(const NormalForm& nf);

// A generator word as a term string, "p1.q0", or "1" when empty.
std::string to_string(const std::vector<GenSymbol>& word);

}  // namespace simpend
