#ifndef TEAMSEM_PARSE_HPP
#define TEAMSEM_PARSE_HPP

#include <string>

#include "teamsem/formula.hpp"
#include "teamsem/signature.hpp"

namespace teamsem {

// Parses the grammar
//
//   formula := disj
//   disj    := conj ( "|" conj )*
//   conj    := unit ( "&" unit )*
//   unit    := "top" | "bot" | VAR | "!" VAR | dep | "(" formula ")"
//   dep     := "=(" [ VAR ( "," VAR )* ] ";" VAR ")"
//   VAR     := [a-z][a-z0-9_]*
//
// "&" binds tighter than "|"; both associate to the left.  Whitespace is
// insignificant between tokens.  Every variable must belong to `sig`;
// otherwise a ParseError naming the offender is raised.
Formula parse(const std::string& text, const Signature& sig);

}  // namespace teamsem

#endif  // TEAMSEM_PARSE_HPP
