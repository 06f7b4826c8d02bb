#pragma once

// Expression parsers for spinor and Chow-class literals.
//
// Spinor grammar:
//   expr     := term (('+'|'-') term)*
//   term     := rational ['*' atom] | atom
//   atom     := '1' | 'e' digits | 'f' digit
//   rational := digits ['/' digits]
// with e-atom digits strictly increasing, from {1..7}. f-atoms are legal
// only when parsing a vector, where every atom must have degree one.
//
// Chow grammar: integer-coefficient polynomial in atoms tau[p1,...,pk] and
// t1..t6, combined with '+', '-', '*', '^'.

#include "dcg/chow.hpp"
#include "dcg/clifford.hpp"
#include "dcg/errors.hpp"

#include <string>

namespace dcg {

ExteriorElement parse_spinor(const std::string& src);
Vector14 parse_vector14(const std::string& src);
ChowClass parse_chow(const std::string& src);

} // namespace dcg
