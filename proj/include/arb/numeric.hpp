// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_NUMERIC_HPP
#define ARB_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Formats a rational as `p/q`, or `p` when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Formats as `p/q` always, even for integers (`3/1`).
std::string to_fraction(const Rational& value);

/// Parses `p`, `-p` or `p/q` (q > 0). Throws Error(kParse) on malformed text.
/// num / den in lowest terms. Throws kInvalidArgument if den is zero.
Rational ratio(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

double to_double(const Rational& value);

/// Least common multiple of denominators.
Integer common_denominator(const Rational* begin, const Rational* end);

}  // namespace arb

#endif  // ARB_NUMERIC_HPP
