#ifndef SPECTRA_PARSE_HPP
#define SPECTRA_PARSE_HPP

#include <string>
#include <vector>

#include "spectra/poly.hpp"

namespace spectra {

/// Parses a polynomial expression over the given ring.
///
/// Grammar: sums of terms joined by `+`/`-`; a term is a `*`-separated
/// product of factors; a factor is a rational literal (`p/q` or integer),
/// a variable power `v^e`, or a parenthesized subexpression (expanded by
/// multiplication). Whitespace is insignificant. Errors carry the byte
/// offset of the offending token.
MultiPoly parse_poly(const std::string& text, const RingPtr& ring);

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const FieldSpec& field);

} // namespace spectra

#endif
