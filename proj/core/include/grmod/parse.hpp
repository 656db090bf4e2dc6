#pragma once

#include <string>

#include "grmod/polynomial.hpp"

namespace grmod {

/* Polynomial text grammar, shared with the command line surface:
 *
 *   poly   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := integer | variable ['^' integer]
 *
 * Integer literals are reduced mod p; whitespace is insignificant.
 * `line` is carried into error messages when parsing files. */
Polynomial parse_polynomial(const std::string& text, const Ring& ring, std::size_t line = 0);

/* Inverse of parse_polynomial: coefficients printed balanced (in
 * (-p/2, p/2]), '*' between factors, '^' for exponents. parse(print(f)) == f. */
std::string print_polynomial(const Ring& ring, const Polynomial& f);

}  // namespace grmod
