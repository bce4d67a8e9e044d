#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galcoh/poly.hpp"

namespace galcoh {

/// Monic irreducible factors over Q with multiplicities, sorted by
/// (degree, coefficients). lc(f) * prod(factor^mult) reproduces f exactly.
///
/// Squarefree parts go through Cantor-Zassenhaus modulo a small prime,
/// quadratic Hensel lifting past the Mignotte bound, and Zassenhaus subset
/// recombination. Exponential recombination is acceptable up to the degrees
/// used here (Trager norms of degree <= 36).
std::vector<std::pair<RationalPoly, int>> factor_rationals(const RationalPoly& f);

bool is_irreducible(const RationalPoly& f);

/// Rational roots of f (distinct, ascending).
std::vector<BigRational> rational_roots(const RationalPoly& f);

namespace modp {

/// Dense polynomial over F_p, ascending, trimmed. p < 2^31.
using Poly = std::vector<std::uint64_t>;

Poly reduce(const std::vector<BigInt>& f, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(const Poly& a, const Poly& b, std::uint64_t p);
Poly make_monic(const Poly& a, std::uint64_t p);
Poly powmod(const Poly& base, const BigInt& e, const Poly& mod, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
bool is_squarefree(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);
/// Full factorization of a monic squarefree polynomial into monic
/// irreducibles (p odd), sorted.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p);
/// Degrees of the irreducible factors (the Frobenius cycle type), ascending.
std::vector<int> factor_degrees(const Poly& f, std::uint64_t p);

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace galcoh
