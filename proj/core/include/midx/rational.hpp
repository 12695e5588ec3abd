#pragma once

#include <gmpxx.h>

#include <string>

namespace midx {

// Exact arithmetic carriers. Rationals are kept canonical: lowest terms,
// positive denominator, zero stored as 0/1. GMP maintains this through
// arithmetic provided operands are canonical, so every construction site
// below canonicalizes eagerly.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p" or "p/q" in base 10. Throws std::invalid_argument on
// anything else (including q = 0).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Largest integer <= value.
long floor_long(const Rational& value);

}  // namespace midx
