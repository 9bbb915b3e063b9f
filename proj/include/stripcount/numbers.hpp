#pragma once

#include <gmpxx.h>

#include <string>

namespace stripcount {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k) over big integers; 0 whenever k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

// F_0 = 0, F_1 = 1, F_2 = 1, ...  Cached internally; safe to call concurrently.
BigInt fibonacci(long i);

// Decimal rendering of a rational, truncated (not rounded) after `digits`
// fractional digits.
std::string decimal_string(const BigRat& value, int digits);

}  // namespace stripcount
