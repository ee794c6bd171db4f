#pragma once

#include <string>

#include "maxclass/cyclic.hpp"
#include "maxclass/maxclass_algebra.hpp"

namespace maxclass {

/// Monomial-sum form: "0", "1", "a", "1+a+a^3". Bit i prints as a^i,
/// ascending.
std::string format_elem(const AlgElem& x);

/// Hex bitmask form, e.g. "0x0B@n=2" for 1+a+a^3 in C_4 (bit i = a^i).
std::string format_elem_hex(const AlgElem& x);

/// Accepts both forms (whitespace tolerated around '+'). Repeated monomials
/// cancel mod 2. A hex form must carry a matching "@n=". Throws
/// std::invalid_argument on malformed input or an n mismatch.
AlgElem parse_elem(const std::string& text, const CyclicContext& ctx);

/// "x1 + (x2)b" with both parts in monomial-sum form.
std::string format_mc(const MCElem& u);

}  // namespace maxclass
