#include "galcoh/numberfield.hpp"

#include <algorithm>

#include "galcoh/errors.hpp"
#include "galcoh/factor.hpp"

namespace galcoh {

namespace {

void trim(NumberField::Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RationalPoly squarefree_part(const RationalPoly& g) {
    if (g.degree() < 1) throw InvalidInput("expected a nonconstant polynomial");
    return (g / gcd(g, g.derivative())).monic();
}

}  // namespace

NumberField::NumberField(const RationalPoly& f) : f_(f.is_zero() ? f : f.monic()) {
    if (f_.degree() < 1 || !is_irreducible(f_))
        throw InvalidInput("number field modulus must be irreducible: " + f.to_string());
}

RationalPoly NumberField::inverse(const RationalPoly& a) const {
    auto r = reduce(a);
    if (r.is_zero()) throw InvalidInput("inverse of zero in a number field");
    auto [g, s, t] = xgcd(r, f_);
    (void)t;
    if (g.degree() != 0) throw InvalidInput("element not invertible");
    return reduce(s * RationalPoly::constant(1 / g.coeff(0)));
}

NumberField::Poly NumberField::lift(const RationalPoly& g) const {
    Poly r;
    for (const auto& c : g.coeffs()) r.push_back(RationalPoly::constant(c));
    return r;
}

NumberField::Poly NumberField::monic(const Poly& a) const {
    if (a.empty()) return a;
    RationalPoly inv = inverse(a.back());
    Poly r;
    for (const auto& c : a) r.push_back(mul(c, inv));
    return r;
}

std::pair<NumberField::Poly, NumberField::Poly> NumberField::divmod(const Poly& a,
                                                                    const Poly& b) const {
    if (b.empty()) throw InvalidInput("division by zero polynomial");
    Poly rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {Poly{}, rem};
    Poly quo(rem.size() - b.size() + 1);
    RationalPoly inv = inverse(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        RationalPoly q = mul(rem[k + db], inv);
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = reduce(rem[k + j] - q * b[j]);
    }
    rem.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
}

NumberField::Poly NumberField::gcd(const Poly& a, const Poly& b) const {
    Poly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

RationalPoly NumberField::eval(const RationalPoly& g, const RationalPoly& elem) const {
    RationalPoly acc;
    for (int i = g.degree(); i >= 0; --i) acc = reduce(acc * elem + RationalPoly::constant(g.coeff(i)));
    return acc;
}

std::pair<BigRational, RationalPoly> squarefree_trager_norm(const RationalPoly& g_in,
                                                            const RationalPoly& f) {
    RationalPoly g = squarefree_part(g_in);
    for (int i = 1; i < 200; ++i) {
        BigRational k = (i % 2 == 1) ? BigRational((i + 1) / 2) : BigRational(-(i / 2));
        RationalPoly n = trager_norm(f.monic(), g, k);
        if (is_squarefree(n)) return {k, n};
    }
    throw Unsupported("no squarefree Trager norm found");
}

std::vector<NumberField::Poly> NumberField::factor(const RationalPoly& g_in) const {
    RationalPoly g = squarefree_part(g_in);
    if (g.degree() == 1) return {lift(g)};
    auto [k, norm] = squarefree_trager_norm(g, f_);
    std::vector<Poly> out;
    const Poly gl = lift(g);
    // x + k t as a polynomial over the field.
    const Poly shift{RationalPoly::monomial(k, 1), RationalPoly::constant(1)};
    for (const auto& [ni, mult] : factor_rationals(norm)) {
        (void)mult;
        // ni(x + k t) by Horner.
        Poly acc;
        for (int i = ni.degree(); i >= 0; --i) {
            Poly next(acc.size() + 1);
            for (std::size_t j = 0; j < acc.size(); ++j) {
                next[j] = reduce(next[j] + acc[j] * shift[0]);
                next[j + 1] = reduce(next[j + 1] + acc[j]);
            }
            if (next.empty()) next.resize(1);
            next[0] = reduce(next[0] + RationalPoly::constant(ni.coeff(i)));
            trim(next);
            acc = std::move(next);
        }
        Poly h = gcd(gl, acc);
        if (h.size() >= 2) out.push_back(h);
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

std::vector<RationalPoly> NumberField::roots(const RationalPoly& g) const {
    std::vector<RationalPoly> out;
    for (const auto& h : factor(g)) {
        if (h.size() != 2) continue;
        RationalPoly beta = reduce(-h[0]);
        if (!eval(g, beta).is_zero()) throw std::logic_error("root verification failed");
        out.push_back(beta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_root_in_extension(const RationalPoly& g, const RationalPoly& f) {
    return root_in_extension(g, f).has_value();
}

std::optional<RationalPoly> root_in_extension(const RationalPoly& g, const RationalPoly& f) {
    NumberField k(f);
    auto r = k.roots(g);
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::vector<int> factor_degrees_over(const RationalPoly& g, const RationalPoly& f) {
    NumberField k(f);
    RationalPoly sg = squarefree_part(g);
    if (sg.degree() == 1) return {1};
    auto [shift, norm] = squarefree_trager_norm(sg, k.modulus());
    (void)shift;
    std::vector<int> degs;
    for (const auto& [ni, m] : factor_rationals(norm)) {
        (void)m;
        degs.push_back(ni.degree() / k.degree());
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace galcoh
