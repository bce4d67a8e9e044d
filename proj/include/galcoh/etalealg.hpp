#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galcoh/permstruct.hpp"
#include "galcoh/poly.hpp"

namespace galcoh {

/// Product of number fields Q[x]/(g_i), stored as the multiset of monic
/// irreducible g_i sorted ascending. Repeated factors are allowed
/// (K[sqrt D] x K[sqrt D] is two copies of x^2 - D).
class EtaleAlgebra {
public:
    EtaleAlgebra() = default;
    /// Factors a squarefree f; throws InvalidInput ("not etale") otherwise.
    static EtaleAlgebra from_poly(const RationalPoly& f);
    /// Product of the algebras of several squarefree polynomials.
    static EtaleAlgebra from_factors(const std::vector<RationalPoly>& polys);
    /// "f1|f2|..." with each f in ascending coefficient form.
    static EtaleAlgebra parse(std::string_view text);

    const std::vector<RationalPoly>& factors() const { return factors_; }
    int degree() const;
    std::vector<int> factor_degrees() const;
    std::string to_string() const;
    /// A single squarefree polynomial whose algebra is this one; repeated
    /// factors are shifted apart.
    RationalPoly defining_poly() const;

    friend bool operator==(const EtaleAlgebra& a, const EtaleAlgebra& b) { return a.factors_ == b.factors_; }

private:
    std::vector<RationalPoly> factors_;
};

/// Square class of a nonzero rational as a squarefree integer.
BigInt square_class(const BigRational& q);

/// Square class of the discriminant.
BigInt quadratic_resolvent(const EtaleAlgebra& l);
BigInt quadratic_resolvent(const RationalPoly& f);

struct DepressedQuartic {
    BigRational p, q, r;  // x^4 + p x^2 + q x + r
    BigRational shift;    // depressed(x) = monic f(x - shift)
};
DepressedQuartic depress_quartic(const RationalPoly& f);

/// x^3 - p x^2 - 4 r x + (4 p r - q^2) for the depressed form; roots are
/// t1 t2 + t3 t4 and its conjugates.
RationalPoly cubic_resolvent_poly(const RationalPoly& f);
EtaleAlgebra cubic_resolvent(const RationalPoly& f);
EtaleAlgebra cubic_resolvent(const EtaleAlgebra& l);
/// Squarefree d with Q(sqrt d) inside Q[x]/(f), f an irreducible quartic;
/// candidates from rational resolvent roots, each verified exactly.
std::vector<BigInt> quadratic_subfields(const RationalPoly& f);

/// Tag of one irreducible factor of degree <= 4: C1, C2, C3, S3, C4, V4, D4, A4, S4.
std::string galois_tag(const RationalPoly& irreducible);
/// Transitive tag for fields, otherwise factor tags joined by 'x' ("C1xC1xC2").
std::string galois_group(const EtaleAlgebra& l);

/// Number of degree-1 factors.
int h0_count(const EtaleAlgebra& l);

/// Factor multisets matched by mutual has_root_in_extension.
bool is_isomorphic(const EtaleAlgebra& a, const EtaleAlgebra& b);

/// Roots of f in Q[t]/(f) as polynomials in t (the automorphisms of the field).
std::vector<RationalPoly> field_automorphisms(const RationalPoly& f);
bool is_galois_field(const RationalPoly& f);
/// Regular permutation representation of Gal(F/Q) for a Galois field F.
PermGroup galois_group_regular(const RationalPoly& f);

/// L tensor T for T = Q[sqrt(disc L)]: degree 2 gives L, degree 3 the degree-6
/// closure. Degree 4 throws Unsupported.
EtaleAlgebra torsor_closure(const EtaleAlgebra& l);

/// True iff L is a G-torsor: field factors pairwise isomorphic, each Galois
/// with group isomorphic to a subgroup of G of the matching order.
bool is_g_torsor(const EtaleAlgebra& l, const PermGroup& g);

/// The mirror algebra: translation of the C4 Kummer datum by (-4, 2).
/// Throws Unsupported without a C4-structure.
EtaleAlgebra mirror_quartic(const EtaleAlgebra& l);

}  // namespace galcoh
