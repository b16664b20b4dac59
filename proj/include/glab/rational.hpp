#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace glab {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

// canonical a/b
Rational frac(long a, long b);

// "num/den", or "num" when den = 1
std::string to_string(const Rational& q);

// accepts "5", "-3/7", "1/2", and unicode minus
Rational parse_rational(std::string_view s);

Rational binomial(long n, long k);
Integer factorial(unsigned long n);

}  // namespace glab
