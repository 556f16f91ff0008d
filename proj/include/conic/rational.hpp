#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace conic {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator (gmp canonical form).
using Rational = mpq_class;

/// Parses "-3/2", "5", "0/7". Returns nothing for malformed input or a
/// zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace conic
