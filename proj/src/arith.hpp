#pragma once

// Exact arithmetic helpers shared by every module. Counts and polynomial
// coefficients routinely exceed 64 bits, so everything is GMP-backed.

#include <gmpxx.h>

#include <span>
#include <string>

namespace genarr {

using BigInt = mpz_class;
using BigRat = mpq_class;

// n! with a process-wide cache. The cache fills idempotently and is safe to
// hit from concurrent workers; returned references stay valid forever.
const BigInt& factorial(unsigned int n);

// C(n,k); 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

// (sum parts)! / prod(parts[i]!). All parts must be >= 0.
BigInt multinomial(std::span<const int> parts);
BigInt multinomial(std::initializer_list<int> parts);

// q = a / b asserting the division is exact; throws InternalError otherwise.
BigInt exact_divide(const BigInt& a, const BigInt& b, const char* what);

std::string to_decimal(const BigInt& v);
BigInt from_decimal(const std::string& s);

}  // namespace genarr
