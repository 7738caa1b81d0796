#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dfone {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses an exact rational from `7`, `-3/2`, `0.25` or `1.5e-3`.
/// Decimal literals are converted exactly; no binary floating point is involved.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical form: `n` for integers, `n/d` otherwise.
std::string to_string(const Rational& value);

/// Exact value of a finite double.
Rational from_double(double value);

inline int sign(const Rational& value) { return sgn(value); }

Rational sum(const RationalVector& values);

}  // namespace dfone
