#ifndef GRAPHZETA_RATIONAL_HPP
#define GRAPHZETA_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace graphzeta {

/// Exact rational scalar. All polynomial/series/matrix arithmetic in this
/// library runs over this type; doubles appear only in root refinement and
/// diagnostics.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// ParseError on anything else, including q = 0.
Rational rational_from_string(std::string_view text);

/// Canonical "p" or "p/q" form, the inverse of rational_from_string.
std::string rational_to_string(const Rational& value);

/// value^exponent for exponent >= 0.
Rational rational_pow(const Rational& value, unsigned long exponent);

/// Nearest double, for reports and numeric diagnostics only.
inline double to_double(const Rational& value) { return value.get_d(); }

} // namespace graphzeta

#endif
