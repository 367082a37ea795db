#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hypcount {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

ExactInt pow_int(const ExactInt& base, long exp);

// C(n, k) for n >= 0; zero when k < 0 or k > n.
ExactInt binomial(const ExactInt& n, long k);

// Number of i-element multisets drawn from r symbols: C(r+i-1, i).
// multiset_coeff(r, 0) = 1 for every r >= 0, multiset_coeff(0, i) = 0 for i > 0.
ExactInt multiset_coeff(long r, long i);

long euler_phi(long m);
std::vector<long> divisors(long m);

bool is_prime(long n);

// Decomposes q = p^e with p prime; returns false if q is not a prime power.
bool factor_prime_power(long q, long& p, long& e);

bool is_integer(const ExactRat& x);

// Decimal rendering truncated toward zero to `digits` fractional digits.
std::string decimal_string(const ExactRat& x, int digits);

}  // namespace hypcount
