#ifndef CZSPLIT_FORMAT_HPP
#define CZSPLIT_FORMAT_HPP

#include <string>

#include "czsplit/gf.hpp"
#include "czsplit/poly.hpp"

namespace czsplit {

/// Field spec string: "gf(p,m)" or
/// "gf(p,m;modulus=c0,c1,...,cm)" (base-p coefficients low-to-high).
FieldPtr parse_field_spec(const std::string& spec);
std::string field_spec(const Field& field);

/// Polynomial text: either the canonical comma form "c0,c1,...,cd"
/// (element encodings, little-endian) or a pretty form like "z^2+3*z+1"
/// with element encodings as coefficients.
Polynomial parse_polynomial(FieldPtr field, const std::string& text);

} // namespace czsplit

#endif
