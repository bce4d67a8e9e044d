#include "galcoh/etalealg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galcoh/errors.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/numberfield.hpp"

namespace galcoh {

EtaleAlgebra EtaleAlgebra::from_poly(const RationalPoly& f) { return from_factors({f}); }

EtaleAlgebra EtaleAlgebra::from_factors(const std::vector<RationalPoly>& polys) {
    EtaleAlgebra l;
    for (const auto& f : polys) {
        if (f.degree() < 1) throw InvalidInput("algebra factors must have positive degree");
        if (!is_squarefree(f)) throw InvalidInput("not etale: " + f.to_string() + " has a repeated factor");
        for (const auto& [g, mult] : factor_rationals(f)) {
            (void)mult;
            l.factors_.push_back(g);
        }
    }
    std::sort(l.factors_.begin(), l.factors_.end());
    if (l.degree() > 8) throw Unsupported("etale algebras are capped at degree 8");
    return l;
}

EtaleAlgebra EtaleAlgebra::parse(std::string_view text) {
    std::vector<RationalPoly> polys;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        polys.push_back(RationalPoly::parse(text.substr(start, bar == std::string_view::npos ? bar : bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return from_factors(polys);
}

int EtaleAlgebra::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.degree();
    return d;
}

std::vector<int> EtaleAlgebra::factor_degrees() const {
    std::vector<int> out;
    for (const auto& f : factors_) out.push_back(f.degree());
    return out;
}

std::string EtaleAlgebra::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += '|';
        s += factors_[i].to_string();
    }
    return s;
}

RationalPoly EtaleAlgebra::defining_poly() const {
    RationalPoly prod = RationalPoly::constant(1);
    for (const auto& f : factors_) {
        RationalPoly g = f;
        for (int k = 1; gcd(prod, g).degree() > 0; ++k) g = f.shift(BigRational(k));
        prod *= g;
    }
    return prod;
}

BigInt square_class(const BigRational& q) {
    if (q == 0) throw InvalidInput("zero has no square class");
    return squarefree_part(q);
}

BigInt quadratic_resolvent(const RationalPoly& f) {
    if (f.degree() < 1) throw InvalidInput("quadratic resolvent needs positive degree");
    return square_class(discriminant(f));
}

BigInt quadratic_resolvent(const EtaleAlgebra& l) {
    // disc of a product is the product of discs times a square.
    BigRational d = 1;
    for (const auto& f : l.factors()) d *= discriminant(f);
    return square_class(d);
}

DepressedQuartic depress_quartic(const RationalPoly& f) {
    if (f.degree() != 4) throw InvalidInput("expected a quartic");
    RationalPoly m = f.monic();
    DepressedQuartic d;
    d.shift = m.coeff(3) / 4;
    RationalPoly g = m.shift(-d.shift);
    d.p = g.coeff(2);
    d.q = g.coeff(1);
    d.r = g.coeff(0);
    return d;
}

RationalPoly cubic_resolvent_poly(const RationalPoly& f) {
    if (!is_squarefree(f)) throw InvalidInput("cubic resolvent needs a squarefree quartic");
    auto d = depress_quartic(f);
    return RationalPoly({4 * d.p * d.r - d.q * d.q, -4 * d.r, -d.p, BigRational(1)});
}

EtaleAlgebra cubic_resolvent(const RationalPoly& f) { return EtaleAlgebra::from_poly(cubic_resolvent_poly(f)); }

EtaleAlgebra cubic_resolvent(const EtaleAlgebra& l) {
    if (l.degree() != 4) throw InvalidInput("cubic resolvent needs a quartic algebra");
    return cubic_resolvent(l.defining_poly());
}

std::vector<BigInt> quadratic_subfields(const RationalPoly& f) {
    if (f.degree() != 4 || !is_irreducible(f)) throw InvalidInput("quadratic subfields need an irreducible quartic");
    auto d = depress_quartic(f);
    std::set<BigInt> out;
    // z = t1 t2 + t3 t4: (t1 + t2)^2 = z - p and t1 t2 is a root of y^2 - z y + r.
    for (const auto& z : rational_roots(cubic_resolvent_poly(f))) {
        const BigRational u = z - d.p, v = z * z - 4 * d.r;
        for (const BigRational& c : {u, v, BigRational(u * v)}) {
            if (c == 0 || is_square(c)) continue;
            const BigInt k = square_class(c);
            if (has_root_in_extension(RationalPoly({BigRational(-k), 0, BigRational(1)}), f)) out.insert(k);
        }
    }
    return {out.begin(), out.end()};
}

std::string galois_tag(const RationalPoly& f) {
    switch (f.degree()) {
        case 1: return "C1";
        case 2: return "C2";
        case 3: return is_square(discriminant(f)) ? "C3" : "S3";
        case 4: break;
        default: throw Unsupported("Galois groups are identified up to degree 4");
    }
    const bool disc_square = is_square(discriminant(f));
    auto res = cubic_resolvent_poly(f);
    auto roots = rational_roots(res);
    if (roots.empty()) return disc_square ? "A4" : "S4";
    if (roots.size() == 3) return "V4";
    // One rational root: C4 iff f splits over Q(sqrt disc).
    RationalPoly quad({-BigRational(square_class(discriminant(f))), BigRational(0), BigRational(1)});
    return factor_degrees_over(f, quad).size() > 1 ? "C4" : "D4";
}

std::string galois_group(const EtaleAlgebra& l) {
    std::string tag;
    for (std::size_t i = 0; i < l.factors().size(); ++i) {
        if (i) tag += 'x';
        tag += galois_tag(l.factors()[i]);
    }
    return tag;
}

int h0_count(const EtaleAlgebra& l) {
    return static_cast<int>(std::count_if(l.factors().begin(), l.factors().end(),
                                          [](const RationalPoly& f) { return f.degree() == 1; }));
}

bool is_isomorphic(const EtaleAlgebra& a, const EtaleAlgebra& b) {
    if (a.factor_degrees() != b.factor_degrees()) return false;
    std::vector<bool> used(b.factors().size(), false);
    for (const auto& f : a.factors()) {
        bool matched = false;
        for (std::size_t j = 0; j < b.factors().size() && !matched; ++j) {
            const auto& g = b.factors()[j];
            if (used[j] || g.degree() != f.degree()) continue;
            if (f == g || (has_root_in_extension(f, g) && has_root_in_extension(g, f))) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

std::vector<RationalPoly> field_automorphisms(const RationalPoly& f) { return NumberField(f).roots(f); }

bool is_galois_field(const RationalPoly& f) {
    return static_cast<int>(field_automorphisms(f).size()) == f.degree();
}

PermGroup galois_group_regular(const RationalPoly& f) {
    NumberField nf(f);
    auto rho = nf.roots(f);
    const int n = f.degree();
    if (static_cast<int>(rho.size()) != n) throw InvalidInput("field is not Galois");
    if (n > 8) throw Unsupported("degree above 8");
    std::vector<Perm> gens;
    for (const auto& s : rho) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            RationalPoly moved = nf.eval(rho[static_cast<std::size_t>(k)], s);
            auto it = std::find(rho.begin(), rho.end(), moved);
            img[static_cast<std::size_t>(k)] = static_cast<int>(it - rho.begin());
        }
        gens.emplace_back(img);
    }
    return PermGroup(n, gens);
}

EtaleAlgebra torsor_closure(const EtaleAlgebra& l) {
    const int n = l.degree();
    if (n == 1 || n == 2) return l;
    if (n != 3) throw Unsupported("torsor closures are implemented for degree 2 and 3");
    const BigInt d = quadratic_resolvent(l);
    if (d == 1) {
        auto f = l.factors();
        f.insert(f.end(), l.factors().begin(), l.factors().end());
        return EtaleAlgebra::from_factors(f);
    }
    RationalPoly t({-BigRational(d), BigRational(0), BigRational(1)});
    std::vector<RationalPoly> parts;
    for (const auto& g : l.factors()) parts.push_back(squarefree_trager_norm(g, t).second);
    return EtaleAlgebra::from_factors(parts);
}

namespace {

/// Order, abelian flag and element-order multiset: a complete invariant for
/// the groups of order <= 8 met here.
std::vector<int> group_signature(const std::vector<Perm>& elements) {
    std::vector<int> sig{static_cast<int>(elements.size())};
    bool abelian = true;
    for (const auto& a : elements)
        for (const auto& b : elements) abelian = abelian && a * b == b * a;
    sig.push_back(abelian ? 1 : 0);
    std::vector<int> orders;
    for (const auto& a : elements) orders.push_back(a.order());
    std::sort(orders.begin(), orders.end());
    sig.insert(sig.end(), orders.begin(), orders.end());
    return sig;
}

}  // namespace

bool is_g_torsor(const EtaleAlgebra& l, const PermGroup& g) {
    if (static_cast<int>(g.order()) != l.degree()) throw InvalidInput("|G| must equal the degree");
    if (l.degree() > 8) throw Unsupported("degree above 8");
    const auto& fs = l.factors();
    const RationalPoly& f = fs.front();
    for (const auto& h : fs)
        if (!is_isomorphic(EtaleAlgebra::from_poly(h), EtaleAlgebra::from_poly(f))) return false;
    if (!is_galois_field(f)) return false;
    auto target = group_signature(galois_group_regular(f).elements());
    // Subgroups of G generated by at most three elements.
    const auto& el = g.elements();
    for (const auto& a : el)
        for (const auto& b : el)
            for (const auto& c : el) {
                PermGroup h(g.degree(), {a, b, c});
                if (static_cast<int>(h.order()) == f.degree() && group_signature(h.elements()) == target) return true;
            }
    return false;
}

EtaleAlgebra mirror_quartic(const EtaleAlgebra& l) {
    auto decoded = c4_decode(l);
    return c4_encode(c4_add(decoded.datum, CoclassC4::mirror(decoded.datum.D)));
}

}  // namespace galcoh
