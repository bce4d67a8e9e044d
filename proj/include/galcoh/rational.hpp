#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace galcoh {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "7", "-5/4", "+3". Throws InvalidInput on malformed text or a zero
/// denominator. The result is canonical (lowest terms, positive denominator).
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);

/// Prime factorization of |n| (n != 0), ascending primes.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// Signed squarefree part: the unique squarefree integer s with n = s * k^2.
BigInt squarefree_part(const BigInt& n);
/// Square-class representative of a nonzero rational (squarefree integer).
BigInt squarefree_part(const BigRational& q);

std::optional<BigRational> rational_sqrt(const BigRational& q);
bool is_square(const BigRational& q);

/// p-adic valuation of a nonzero rational.
int valuation(const BigRational& q, const BigInt& p);
int valuation(const BigInt& n, const BigInt& p);

BigRational pow(const BigRational& q, int e);

bool is_prime(const BigInt& n);

}  // namespace galcoh
