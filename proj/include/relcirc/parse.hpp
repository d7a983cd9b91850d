#ifndef RELCIRC_PARSE_HPP
#define RELCIRC_PARSE_HPP

#include <string>

#include "relcirc/term.hpp"

namespace relcirc {

// Concrete term grammar (whitespace-insensitive, # comments):
//   term := par { ";" par }
//   par  := atom { "|" atom }
//   atom := "(" term ")" | gen
// Generators as listed in the README. Syntax errors carry line/column.
TermPtr parse_term(const std::string& text);

// Inverse of parse_term up to structural equality.
std::string pretty_print(const TermPtr& t);

} // namespace relcirc

#endif
