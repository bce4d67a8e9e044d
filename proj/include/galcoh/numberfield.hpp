#pragma once

#include <optional>
#include <vector>

#include "galcoh/poly.hpp"

namespace galcoh {

/// The field Q[t]/(f) for an irreducible f, with elements stored as
/// polynomials in t of degree < deg f.
class NumberField {
public:
    /// Throws InvalidInput unless f is irreducible over Q.
    explicit NumberField(const RationalPoly& f);

    const RationalPoly& modulus() const { return f_; }
    int degree() const { return f_.degree(); }

    RationalPoly reduce(const RationalPoly& a) const { return a % f_; }
    RationalPoly mul(const RationalPoly& a, const RationalPoly& b) const { return (a * b) % f_; }
    RationalPoly inverse(const RationalPoly& a) const;

    /// Polynomials over the field, coefficients ascending.
    using Poly = std::vector<RationalPoly>;
    Poly lift(const RationalPoly& g) const;
    Poly monic(const Poly& a) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly gcd(const Poly& a, const Poly& b) const;
    /// Evaluate g at an element of the field.
    RationalPoly eval(const RationalPoly& g, const RationalPoly& elem) const;

    /// Monic irreducible factors of a squarefree g over this field (Trager).
    std::vector<Poly> factor(const RationalPoly& g) const;
    /// Roots of g in this field, sorted.
    std::vector<RationalPoly> roots(const RationalPoly& g) const;

private:
    RationalPoly f_;
};

/// True iff g has a root in Q[x]/(f); f must be irreducible. Works on the
/// squarefree part of g. Every returned root is verified exactly.
bool has_root_in_extension(const RationalPoly& g, const RationalPoly& f);

/// A root of g in Q[t]/(f) written as a polynomial in t, if one exists.
std::optional<RationalPoly> root_in_extension(const RationalPoly& g, const RationalPoly& f);

/// Degrees of the irreducible factors of the squarefree part of g over
/// Q[t]/(f), ascending.
std::vector<int> factor_degrees_over(const RationalPoly& g, const RationalPoly& f);

/// The k used for a squarefree Trager norm of g over Q[t]/(f), together with
/// the norm itself.
std::pair<BigRational, RationalPoly> squarefree_trager_norm(const RationalPoly& g,
                                                            const RationalPoly& f);

}  // namespace galcoh
