#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace moduli::exact {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" or "p/q"; the result is canonical.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

int sign(const Rational& q);
Rational power(const Rational& base, int exponent);
Integer factorial(int k);
// (2k-1)!! for k >= 0, with (-1)!! = 1.
Integer odd_double_factorial(int k);

// Positive rationals with numerator and denominator drawn from 1..bound.
// Uses the raw mt19937_64 stream so the sequence is identical on every platform.
std::vector<std::vector<Rational>> random_positive_points(std::size_t dimension, std::size_t count,
                                                          std::uint64_t seed, unsigned bound = 1000);

}  // namespace moduli::exact
