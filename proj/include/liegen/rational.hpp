#ifndef LIEGEN_RATIONAL_HPP
#define LIEGEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "liegen/error.hpp"

namespace liegen {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses the canonical form "p" or "p/q" (lowest terms, q > 1, no sign on q,
/// no leading '+', no "-0"). This is the only form accepted in documents.
Rational parse_canonical_rational(std::string_view text);

/// Lenient parser for user input: accepts "p", "p/q" (any q != 0) and
/// finite decimals such as "-7.25", converting exactly.
Rational parse_rational(std::string_view text);

/// Comma-separated list of lenient rationals, e.g. "8,12,14".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

/// Decimal approximation for human-readable output only.
double approx(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer factorial(unsigned long k);
Integer binomial(long s, long i);

/// The smallest multiple of 2^-bits that is strictly greater than q.
Rational dyadic_above(const Rational& q, unsigned bits);

}  // namespace liegen

#endif
