#include "galcoh/kummerh1.hpp"

#include <algorithm>
#include <cstdlib>

#include "galcoh/errors.hpp"
#include "galcoh/factor.hpp"

namespace galcoh {

// ---------------------------------------------------------------- QuadElem

QuadElem QuadElem::parse(const BigInt& d, std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) return QuadElem{d, parse_rational(text), 0};
    return QuadElem{d, parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string QuadElem::to_string() const { return galcoh::to_string(x) + "," + galcoh::to_string(y); }

namespace {

void same_field(const QuadElem& a, const QuadElem& b) {
    if (a.d != b.d) throw InvalidInput("quadratic elements live in different fields");
}

}  // namespace

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    same_field(a, b);
    return QuadElem{a.d, a.x + b.x, a.y + b.y};
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    same_field(a, b);
    return QuadElem{a.d, a.x - b.x, a.y - b.y};
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    same_field(a, b);
    return QuadElem{a.d, a.x * b.x + BigRational(a.d) * a.y * b.y, a.x * b.y + a.y * b.x};
}

QuadElem QuadElem::inverse() const {
    BigRational n = norm();
    if (n == 0) throw InvalidInput("element is not invertible");
    return QuadElem{d, x / n, -y / n};
}

QuadElem QuadElem::pow(int e) const {
    QuadElem base = e < 0 ? inverse() : *this;
    QuadElem acc = rational(d, 1);
    for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
    return acc;
}

EtaleAlgebra kummer_radical(int n, const BigRational& a) {
    if (n < 2 || n > 4) throw Unsupported("radical algebras are implemented for n = 2, 3, 4");
    if (a == 0) throw InvalidInput("radicand must be nonzero");
    return EtaleAlgebra::from_poly(RationalPoly::monomial(1, n) - RationalPoly::constant(a));
}

BigInt tate_dual_twist(const BigInt& d) { return square_class(BigRational(-3 * d)); }

int mu_power_dual(int k, int p) {
    if (p < 3 || !is_prime(BigInt(p))) throw InvalidInput("mu_power_dual needs an odd prime");
    int m = p - 1;
    return (((1 - k) % m) + m) % m;
}

namespace {

void require_squarefree_class(const BigInt& d, const char* what) {
    if (d == 0 || squarefree_part(d) != d) throw InvalidInput(std::string(what) + " must be a squarefree integer");
}

RationalPoly quad_poly(const BigRational& d) {
    return RationalPoly({-d, BigRational(0), BigRational(1)});
}

}  // namespace

// ---------------------------------------------------------------- C3

void CoclassC3::validate() const {
    require_squarefree_class(D, "D");
    if (delta.d != tate_dual_twist(D))
        throw InvalidInput("delta must lie in Q[sqrt(" + galcoh::to_string(tate_dual_twist(D)) + ")]");
    if (delta.norm() != 1) throw InvalidInput("delta must have norm 1");
}

EtaleAlgebra c3_encode(const CoclassC3& cc) {
    cc.validate();
    if (cc.delta.is_rational())  // delta = +-1: the zero class, K x T
        return EtaleAlgebra::from_factors({RationalPoly::x(), quad_poly(BigRational(cc.D))});
    return EtaleAlgebra::from_poly(RationalPoly({-cc.delta.trace(), BigRational(-3), BigRational(0), BigRational(1)}));
}

C3Decoded c3_decode(const EtaleAlgebra& l) {
    if (l.degree() != 3) throw InvalidInput("C3 decoding needs a cubic algebra");
    C3Decoded out;
    out.datum.D = quadratic_resolvent(l);
    const BigInt d = tate_dual_twist(out.datum.D);
    if (h0_count(l) > 0) {
        out.datum.delta = QuadElem::rational(d, 1);
        out.sign_ambiguous = false;
        return out;
    }
    RationalPoly f = l.factors().front().monic();
    RationalPoly g = f.shift(-f.coeff(2) / 3);
    const BigRational p = g.coeff(1), q = g.coeff(0);
    QuadElem delta;
    if (p == 0) {
        // Pure Kummer: x^3 = u, T' split, delta = (u, 1/u).
        const BigRational u = -q;
        delta = QuadElem{d, (u + 1 / u) / 2, (u - 1 / u) / 2};
    } else {
        // Cardano: delta0 a root of z^2 + q z - p^3/27, N(delta0) = (-p/3)^3.
        const BigRational disc = q * q + 4 * p * p * p / 27;
        auto m = rational_sqrt(disc / BigRational(d));
        if (!m) throw std::logic_error("Cardano discriminant outside the twist class");
        const QuadElem delta0{d, -q / 2, *m / 2};
        const BigRational lam = -p / 3;
        if (auto s = rational_sqrt(lam))
            delta = BigRational(1) / (*s * *s * *s) * delta0;
        else
            delta = delta0.conj() * delta0.inverse();
    }
    if (delta.is_rational()) throw std::logic_error("cubic field decoded to the zero class");
    out.datum.delta = delta;
    return out;
}

CoclassC3 c3_add(const CoclassC3& a, const CoclassC3& b) {
    a.validate();
    b.validate();
    if (a.D != b.D) throw InvalidInput("C3 data must share D");
    return CoclassC3{a.D, a.delta * b.delta};
}

// ---------------------------------------------------------------- V4

namespace {

void validate_r(const std::vector<RationalPoly>& r) {
    int deg = 0;
    for (const auto& g : r) {
        if (!g.is_monic() || !is_irreducible(g)) throw InvalidInput("R factors must be monic irreducible");
        deg += g.degree();
    }
    if (deg != 3) throw InvalidInput("R must be a cubic algebra");
}

std::vector<RationalPoly> r_mul(const std::vector<RationalPoly>& r, const std::vector<RationalPoly>& a,
                                const std::vector<RationalPoly>& b) {
    std::vector<RationalPoly> out;
    for (std::size_t j = 0; j < r.size(); ++j) out.push_back((a[j] * b[j]) % r[j]);
    return out;
}

}  // namespace

std::vector<BigRational> r_symmetric(const std::vector<RationalPoly>& r, const std::vector<RationalPoly>& elem) {
    if (elem.size() != r.size()) throw InvalidInput("one coordinate per factor of R");
    RationalPoly cp = RationalPoly::constant(1);
    for (std::size_t j = 0; j < r.size(); ++j) cp *= charpoly(r[j], elem[j] % r[j]).monic();
    return {-cp.coeff(2), cp.coeff(1), -cp.coeff(0)};
}

void CoclassV4::validate() const {
    validate_r(R);
    if (r_symmetric(R, delta)[2] != 1) throw InvalidInput("delta must have norm 1");
}

RationalPoly v4_quartic(const CoclassV4& cc) {
    cc.validate();
    auto quartic = [](const std::vector<BigRational>& e, const BigRational& s) {
        return RationalPoly({e[0] * e[0] - 4 * e[1], -8 * s, -2 * e[0], BigRational(0), BigRational(1)});
    };
    RationalPoly f = quartic(r_symmetric(cc.R, cc.delta), 1);
    if (is_squarefree(f)) return f;
    // Colliding roots: replace sqrt(delta) by xi sqrt(delta).
    for (int k = 1; k < 50; ++k)
        for (int j = 0; j < 3; ++j) {
            std::vector<RationalPoly> xi;
            for (std::size_t idx = 0; idx < cc.R.size(); ++idx)
                xi.push_back((RationalPoly::constant(k + static_cast<int>(idx) * 7) + RationalPoly::monomial(1, 1 + j)) %
                             cc.R[idx]);
            BigRational nxi = r_symmetric(cc.R, xi)[2];
            if (nxi == 0) continue;
            auto d2 = r_mul(cc.R, r_mul(cc.R, xi, xi), cc.delta);
            f = quartic(r_symmetric(cc.R, d2), nxi);
            if (is_squarefree(f)) return f;
        }
    throw std::logic_error("no separable generator found for the V4 datum");
}

EtaleAlgebra v4_encode(const CoclassV4& cc) { return EtaleAlgebra::from_poly(v4_quartic(cc)); }

CoclassV4 v4_decode(const EtaleAlgebra& l) {
    if (l.degree() != 4) throw InvalidInput("V4 decoding needs a quartic algebra");
    const RationalPoly f = l.defining_poly().monic();
    // Need a generator with q != 0; otherwise move to theta + k theta^2.
    RationalPoly g = f;
    for (int k = 1; depress_quartic(g).q == 0; ++k) {
        if (k > 50) throw std::logic_error("no Tschirnhaus generator with q != 0");
        g = charpoly(f, RationalPoly({BigRational(0), BigRational(1), BigRational(k)})).monic();
        if (!is_squarefree(g)) g = f;
    }
    auto dq = depress_quartic(g);
    const RationalPoly res = cubic_resolvent_poly(g);
    const BigRational s = -dq.q / 8;
    CoclassV4 out;
    for (const auto& [h, mult] : factor_rationals(res)) {
        (void)mult;
        out.R.push_back(h);
        // delta0 = (z - p)/4 with N(delta0) = s^2; delta = delta0^3 / s^2.
        RationalPoly d0 = RationalPoly({-dq.p / 4, BigRational(1, 4)});
        out.delta.push_back((d0 * d0 * d0 * (1 / (s * s))) % h);
    }
    out.validate();
    return out;
}

CoclassV4 v4_add(const CoclassV4& a, const CoclassV4& b) {
    a.validate();
    b.validate();
    if (a.R != b.R) throw InvalidInput("V4 data must share R");
    return CoclassV4{a.R, r_mul(a.R, a.delta, b.delta)};
}

// ---------------------------------------------------------------- C4

CoclassC4 CoclassC4::make(const BigInt& D, const BigRational& a, const BigRational& b, const BigRational& c) {
    require_squarefree_class(D, "D");
    CoclassC4 cc{D, QuadElem{BigInt(-D), a, b}, c};
    cc.validate();
    return cc;
}

void CoclassC4::validate() const {
    require_squarefree_class(D, "D");
    if (alpha.d != -D) throw InvalidInput("alpha must lie in Q[sqrt(-D)]");
    if (c == 0) throw InvalidInput("c must be nonzero");
    if (alpha.norm() != c * c * c * c) throw InvalidInput("N(alpha) must equal c^4");
}

RationalPoly c4_quartic(const CoclassC4& cc) {
    cc.validate();
    const BigRational& a = cc.alpha.x;
    return RationalPoly({2 * cc.c * cc.c - 2 * a, BigRational(0), -4 * cc.c, BigRational(0), BigRational(1)});
}

EtaleAlgebra c4_encode(const CoclassC4& cc) {
    RationalPoly f = c4_quartic(cc);
    if (is_squarefree(f)) return EtaleAlgebra::from_poly(f);
    // Degenerate datum: rescale by (beta^4, N(beta)) until the roots separate.
    for (int h = 1; h < 20; ++h)
        for (int u = 0; u <= h; ++u) {
            const int v = h - u;
            QuadElem beta{cc.alpha.d, u, v};
            BigRational n = beta.norm();
            if (n == 0) continue;
            CoclassC4 moved{cc.D, cc.alpha * beta.pow(4), cc.c * n};
            f = c4_quartic(moved);
            if (is_squarefree(f)) return EtaleAlgebra::from_poly(f);
        }
    throw std::logic_error("no separable rescaling of the C4 datum");
}

namespace {

std::size_t height(const BigRational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t height(const CoclassC4& cc) { return height(cc.alpha.x) + height(cc.alpha.y) + height(cc.c); }

CoclassC4 from_even_quartic(BigRational P, BigRational Q) {
    if (P == 0) {
        // Roots +-sqrt(gamma), gamma = m sqrt(d); c = 0 is not a datum, so move
        // to gamma (u + v sqrt d)^2, another generator of the same algebra.
        const BigInt d = square_class(-Q);
        const QuadElem gamma{d, 0, *rational_sqrt(-Q / BigRational(d))};
        for (int u = 1;; ++u) {
            QuadElem w{d, u, 1};
            QuadElem g = gamma * w * w;
            if (g.x != 0 && g.y != 0) {
                P = -2 * g.x;
                Q = g.norm();
                break;
            }
        }
    }
    const BigRational c = -P / 4;
    const BigRational a = c * c - Q / 2;
    const BigRational n = c * c * c * c - a * a;
    if (n == 0) throw std::logic_error("even quartic is not separable");
    const BigInt D = square_class(n);
    auto b = rational_sqrt(n / BigRational(D));
    return CoclassC4::make(D, a, *b, c);
}

/// Even generators x^4 + P x^2 + Q of an irreducible quartic field, one per
/// quadratic subfield found through a rational resolvent root.
std::vector<std::pair<BigRational, BigRational>> even_generators(const RationalPoly& f) {
    auto dq = depress_quartic(f);
    const BigRational &p = dq.p, &q = dq.q, &r = dq.r;
    auto zs = rational_roots(cubic_resolvent_poly(f));
    if (zs.empty()) throw Unsupported("quartic has no quadratic subfield (A4 or S4), so no C4-structure");
    std::vector<std::pair<BigRational, BigRational>> out;
    for (const auto& z : zs) {
        BigInt d;
        BigRational g0, g1;
        if (z != p) {
            d = square_class(z - p);
            auto m = rational_sqrt((z - p) / BigRational(d));
            if (d == 1) continue;
            g0 = -(z + p) / 4;
            g1 = q / (2 * *m * BigRational(d));
        } else {
            if (z * z - 4 * r == 0) continue;
            d = square_class(z * z - 4 * r);
            if (d == 1) continue;
            auto n = rational_sqrt((z * z - 4 * r) / BigRational(d));
            g0 = -p / 2;
            g1 = -*n / 2;
        }
        if (g1 != 0) {
            out.emplace_back(-2 * g0, g0 * g0 - BigRational(d) * g1 * g1);
            continue;
        }
        // L = F(sqrt g0) with g0 rational: use sqrt(g0) + k sqrt(d).
        for (int k = 1;; ++k) {
            BigRational dk = BigRational(d) * k * k;
            if (dk != g0) {
                out.emplace_back(-2 * (g0 + dk), (g0 - dk) * (g0 - dk));
                break;
            }
        }
    }
    if (out.empty()) throw std::logic_error("no even generator found");
    return out;
}

/// sqrt of the discriminant class of a monic quadratic: x^2 + b x + c -> b^2/4 - c.
BigRational quad_radicand(const RationalPoly& g) {
    const BigRational b = g.coeff(1), c = g.coeff(0);
    return b * b / 4 - c;
}

}  // namespace

C4Decoded c4_decode(const EtaleAlgebra& l, std::optional<BigInt> d_hint) {
    if (l.degree() != 4) throw InvalidInput("C4 decoding needs a quartic algebra");
    if (d_hint) require_squarefree_class(*d_hint, "D");
    const auto degs = l.factor_degrees();
    const auto& fs = l.factors();
    C4Decoded out;
    auto check_hint = [&](const CoclassC4& cc) {
        if (d_hint && *d_hint != cc.D)
            throw InvalidInput("algebra has no C4-structure with D = " + galcoh::to_string(*d_hint));
        out.datum = cc;
        out.sign_ambiguous = cc.alpha.y != 0;
        return out;
    };
    if (degs == std::vector<int>{1, 3}) throw Unsupported("K x (cubic) has no C4-structure");
    if (degs == std::vector<int>{1, 1, 1, 1}) return check_hint(CoclassC4::trivial(1));
    if (degs == std::vector<int>{1, 1, 2}) return check_hint(CoclassC4::trivial(square_class(quad_radicand(fs[2]))));
    if (degs == std::vector<int>{2, 2}) {
        const BigRational r1 = quad_radicand(fs[0]);
        BigRational r2 = quad_radicand(fs[1]);
        const BigInt d1 = square_class(r1), d2 = square_class(r2);
        if (d1 == d2 && (!d_hint || *d_hint == d1)) return check_hint(CoclassC4::mirror(d1));
        if (r1 == r2) r2 *= 4;
        // sqrt(r1) on one factor and sqrt(r2) on the other.
        return check_hint(from_even_quartic(-(r1 + r2), r1 * r2));
    }
    const RationalPoly& f = fs[0];
    std::vector<std::pair<BigRational, BigRational>> gens;
    if (f.coeff(1) == 0 && f.coeff(3) == 0) gens.emplace_back(f.coeff(2), f.coeff(0));
    for (const auto& g : even_generators(f)) gens.push_back(g);
    if (d_hint)
        for (const auto& [P, Q] : gens) {
            CoclassC4 cc = from_even_quartic(P, Q);
            if (cc.D == *d_hint) return check_hint(cc);
        }
    return check_hint(from_even_quartic(gens.front().first, gens.front().second));
}

CoclassC4 c4_reduce(const CoclassC4& in) {
    in.validate();
    CoclassC4 best = in;
    auto try_beta = [&](const QuadElem& beta) {
        BigRational n = beta.norm();
        if (n == 0) return false;
        CoclassC4 cand{best.D, best.alpha * beta.pow(4).inverse(), best.c / n};
        if (height(cand) < height(best)) {
            best = cand;
            return true;
        }
        return false;
    };
    for (int round = 0; round < 64; ++round) {
        bool improved = false;
        // Rational beta: primes of a, b, c.
        std::vector<BigInt> primes;
        for (const BigRational* q : {&best.alpha.x, &best.alpha.y, &best.c}) {
            if (*q == 0) continue;
            for (const BigInt& part : {BigInt(q->get_num()), BigInt(q->get_den())})
                if (abs(part) > 1 && abs(part) < BigInt(1) << 64)
                    for (const auto& [p, e] : factor_integer(part)) {
                        (void)e;
                        primes.push_back(p);
                    }
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        for (const auto& p : primes) {
            while (try_beta(QuadElem::rational(best.alpha.d, BigRational(p)))) improved = true;
            while (try_beta(QuadElem::rational(best.alpha.d, BigRational(1) / BigRational(p)))) improved = true;
        }
        for (int u = -2; u <= 2; ++u)
            for (int v = 1; v <= 2; ++v) improved = try_beta(QuadElem{best.alpha.d, u, v}) || improved;
        if (!improved) break;
    }
    best.validate();
    return best;
}

CoclassC4 c4_add(const CoclassC4& a, const CoclassC4& b) {
    a.validate();
    b.validate();
    if (a.D != b.D) throw InvalidInput("C4 data must share D");
    return c4_reduce(CoclassC4{a.D, a.alpha * b.alpha, a.c * b.c});
}

}  // namespace galcoh
