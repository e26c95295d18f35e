#pragma once

#include "webcat/term.hpp"

namespace webcat {

/// Parses the ASCII term grammar:
///   sum    := scaled ('+' scaled)*
///   scaled := (rational ':')? seq
///   seq    := ten (';' ten)*        -- left operand is the lower diagram
///   ten    := atom ('*' atom)*      -- left operand is the left diagram
///   atom   := generator | '(' sum ')'
/// Generators: split(a,b) merge(a,b) cap cup ant id(a) x(a,b) tagin tagout
/// lcap(a) lcup(a) uid(a) did(a); whitespace insensitive.
/// Under the oriented flavor, split/merge/cap/cup/id/x denote the upward
/// pieces. Throws std::invalid_argument with position info on bad input.
Morphism parse_term(const std::string& source, Flavor flavor);

/// Canonical text for a morphism, parseable by parse_term.
std::string print_morphism(const Morphism& m);

}  // namespace webcat
