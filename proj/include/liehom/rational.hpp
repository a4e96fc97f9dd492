#ifndef LIEHOM_RATIONAL_HPP
#define LIEHOM_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace liehom {

/// Exact rational scalar. GMP keeps values canonical: gcd(num, den) = 1,
/// den > 0, zero stored as 0/1.
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional leading minus; the result is
/// canonicalized, so "2/4" parses to 1/2. Returns nullopt on malformed
/// input or a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace liehom

#endif
