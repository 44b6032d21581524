#ifndef SEMIPROB_RATIONAL_HPP
#define SEMIPROB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "semiprob/errors.hpp"

namespace semiprob {

// Exact arithmetic types. GMP keeps rationals canonical (positive
// denominator, gcd(|num|, den) = 1) through all ring operations.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds the canonical rational num/den.
Rational make_rational(long num, long den = 1);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// n! / (k_1! k_2! ... k_m!) for k_1 + ... + k_m = n.
Integer multinomial(std::span<const int> parts);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and plain decimals such as "10.5" or "-0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace semiprob

#endif
