#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "galcoh/rational.hpp"

namespace galcoh {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<BigRational> coeffs);
    RationalPoly(std::initializer_list<BigRational> coeffs);
    static RationalPoly constant(const BigRational& c);
    static RationalPoly monomial(const BigRational& c, int degree);
    static RationalPoly x() { return monomial(1, 1); }

    /// Ascending comma-separated rationals, e.g. "-2,0,1" is x^2 - 2.
    static RationalPoly parse(std::string_view text);
    std::string to_string() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(int i) const;
    const BigRational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    RationalPoly monic() const;
    RationalPoly derivative() const;
    BigRational eval(const BigRational& x) const;
    RationalPoly compose(const RationalPoly& inner) const;
    /// f(x + a)
    RationalPoly shift(const BigRational& a) const;
    /// f(lambda * x)
    RationalPoly scale_var(const BigRational& lambda) const;
    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to *this.
    std::vector<BigInt> primitive_integer() const;
    static RationalPoly from_integers(const std::vector<BigInt>& c);

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const BigRational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const BigRational& c) { return a *= c; }
    friend RationalPoly operator*(const BigRational& c, RationalPoly a) { return a *= c; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }
    /// Total order: by degree, then coefficients from the top. Used for
    /// deterministic output ordering.
    friend bool operator<(const RationalPoly& a, const RationalPoly& b);

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b);
RationalPoly pow(const RationalPoly& f, unsigned e);

/// Monic gcd (zero if both are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);
/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
std::tuple<RationalPoly, RationalPoly, RationalPoly> xgcd(const RationalPoly& a,
                                                          const RationalPoly& b);

bool is_squarefree(const RationalPoly& f);
/// Yun decomposition of a nonconstant polynomial: monic squarefree, pairwise
/// coprime factors s_i with f = lc * prod s_i^i. Entries with s_i = 1 are omitted.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f);

BigRational resultant(const RationalPoly& f, const RationalPoly& g);
BigRational discriminant(const RationalPoly& f);

/// Lagrange/Newton interpolation through distinct nodes.
RationalPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

/// Resultant in an auxiliary variable y, returned as a polynomial in x:
/// Res_y(f(y), G_x(y)) where G_x is produced by `slice(x)`. The caller states
/// an upper bound on the x-degree of the result.
RationalPoly resultant_family(const RationalPoly& f,
                              const std::function<RationalPoly(const BigRational&)>& slice,
                              int degree_bound);

/// Trager norm Res_y(f(y), g(x - k*y)).
RationalPoly trager_norm(const RationalPoly& f, const RationalPoly& g, const BigRational& k);

/// Characteristic polynomial of the element elem(theta) in Q[theta]/(modulus),
/// i.e. Res_y(modulus(y), x - elem(y)) for monic modulus.
RationalPoly charpoly(const RationalPoly& modulus, const RationalPoly& elem);

}  // namespace galcoh
