#pragma once

#include <string>

#include "kummerlab/cyclotomic.hpp"

namespace kummerlab {

// Evaluating parser for ring elements. Grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'zeta' | 'pi' | 'varpi' | 'p' | '(' expr ')' | '-' atom
//
// Integer literals may be arbitrarily long and are folded mod p^k as they
// are read; exponents must fit in 64 bits. '/' requires a unit divisor.
// Inputs are limited to 64 KiB.
CycloElem parse_element(const std::string& text, const RingContextPtr& ctx);

// Canonical, parseable rendering; parse_element(print_element(x)) == x.
std::string print_element(const CycloElem& x);

} // namespace kummerlab
