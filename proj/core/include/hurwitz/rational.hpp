#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q" with q >= 1, always with an explicit denominator.
std::string to_string(const Rational& q);
/// num/den in lowest terms.
Rational ratio(const Integer& num, const Integer& den);
std::string to_string(const Integer& z);

/// Accepts "p/q", "p" or "-p/q". Throws std::invalid_argument on junk or zero denominators.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned exp);

}  // namespace hurwitz
