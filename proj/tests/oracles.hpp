#pragma once

// Independent oracles and random data shared by the unit tests and the
// acceptance binary.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galcoh/etalealg.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/numeric.hpp"

namespace oracle {

using namespace galcoh;

/// Frobenius cycle types of an integer-scaled f at the first `count` good primes.
inline std::set<std::vector<int>> cycle_types(const RationalPoly& f, int count) {
    auto z = f.primitive_integer();
    const BigInt disc_num = BigRational(discriminant(RationalPoly::from_integers(z))).get_num();
    std::set<std::vector<int>> types;
    int used = 0;
    for (std::uint64_t p = 3; used < count; p += 2) {
        if (!is_prime(BigInt(static_cast<unsigned long>(p)))) continue;
        if (disc_num % BigInt(static_cast<unsigned long>(p)) == 0) continue;
        if (z.back() % BigInt(static_cast<unsigned long>(p)) == 0) continue;
        auto fp = modp::make_monic(modp::reduce(z, p), p);
        types.insert(modp::factor_degrees(fp, p));
        ++used;
    }
    return types;
}

/// Galois tag of an irreducible f of degree <= 4 from cycle types alone.
inline std::string frobenius_tag(const RationalPoly& f, int primes = 200) {
    auto t = cycle_types(f, primes);
    auto has = [&](std::vector<int> v) { return t.count(v) > 0; };
    switch (f.degree()) {
        case 1: return "C1";
        case 2: return "C2";
        case 3: return has({1, 2}) ? "S3" : "C3";
        case 4:
            if (has({1, 3})) return (has({4}) || has({1, 1, 2})) ? "S4" : "A4";
            if (has({4})) return has({1, 1, 2}) ? "D4" : "C4";
            return "V4";
        default: return "?";
    }
}

inline RationalPoly random_monic(int degree, int bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-bound, bound);
    std::vector<BigRational> co;
    for (int i = 0; i < degree; ++i) co.emplace_back(c(rng));
    co.emplace_back(1);
    return RationalPoly(co);
}

inline RationalPoly random_irreducible(int degree, int bound, std::mt19937_64& rng) {
    while (true) {
        auto f = random_monic(degree, bound, rng);
        if (is_squarefree(f) && is_irreducible(f)) return f;
    }
}

inline RationalPoly random_squarefree(int degree, int bound, std::mt19937_64& rng) {
    while (true) {
        auto f = random_monic(degree, bound, rng);
        if (is_squarefree(f)) return f;
    }
}

inline BigRational random_rational(std::mt19937_64& rng, int num = 9, int den = 5) {
    std::uniform_int_distribution<int> n(-num, num), d(1, den);
    int a = 0;
    while (a == 0) a = n(rng);
    BigRational q(a, d(rng));
    q.canonicalize();
    return q;
}

inline const std::vector<long>& test_square_classes() {
    static const std::vector<long> ds{-3, -1, 2, 3, 5, -2, 6, 7, -5, 14, 1, -7, 17, 10};
    return ds;
}

/// Norm-one delta = gamma / conj(gamma) in Q[sqrt(-3D)], delta != +-1.
inline CoclassC3 random_c3(const BigInt& D, std::mt19937_64& rng) {
    const BigInt d = tate_dual_twist(D);
    std::uniform_int_distribution<int> u(-6, 6);
    while (true) {
        QuadElem g{d, u(rng), u(rng)};
        if (g.norm() == 0 || g.y == 0 || g.x == 0) continue;
        QuadElem delta = g * g.conj().inverse();
        if (!delta.is_rational()) return CoclassC3{D, delta};
    }
}

/// alpha = c^2 gamma / conj(gamma) has norm c^4; every datum has this shape.
inline CoclassC4 random_c4(const BigInt& D, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-5, 5);
    while (true) {
        QuadElem g{BigInt(-D), u(rng), u(rng)};
        if (g.norm() == 0) continue;
        BigRational c = random_rational(rng, 5, 3);
        QuadElem alpha = (c * c) * (g * g.conj().inverse());
        return CoclassC4{D, alpha, c};
    }
}

/// delta = eta^3 / N(eta) over the cubic algebra with factors r.
inline CoclassV4 random_v4_over(const std::vector<RationalPoly>& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-4, 4);
    while (true) {
        std::vector<RationalPoly> eta;
        for (const auto& g : r) {
            std::vector<BigRational> co;
            for (int i = 0; i < g.degree(); ++i) co.emplace_back(u(rng));
            eta.push_back(RationalPoly(co));
        }
        BigRational n = r_symmetric(r, eta)[2];
        if (n == 0) continue;
        std::vector<RationalPoly> delta;
        for (std::size_t j = 0; j < eta.size(); ++j) delta.push_back((eta[j] * eta[j] * eta[j] * (1 / n)) % r[j]);
        return CoclassV4{r, delta};
    }
}

/// random_v4_over a random cubic algebra R.
inline CoclassV4 random_v4(std::mt19937_64& rng) {
    return random_v4_over(EtaleAlgebra::from_poly(random_squarefree(3, 6, rng)).factors(), rng);
}

/// Ball for x + y sqrt(d).
inline ComplexBall quad_ball(const QuadElem& q, mpfr_prec_t prec) {
    BigInt ad = abs(q.d);
    auto sq = numeric_roots(RationalPoly({-BigRational(ad), BigRational(0), BigRational(1)}), static_cast<int>(prec));
    const ComplexBall& s = sq.back();  // positive root
    ComplexBall y = ComplexBall::exact(q.y, 0, prec) * s;
    if (q.d < 0) y = y * ComplexBall::exact(0, 1, prec);
    return ComplexBall::exact(q.x, 0, prec) + y;
}

/// The three cube roots of a norm-one delta as certified balls.
inline std::vector<ComplexBall> cube_roots(const QuadElem& delta, mpfr_prec_t prec) {
    // z^6 - tr(delta) z^3 + 1 has the cube roots of delta and of its conjugate.
    RationalPoly sextic({BigRational(1), 0, 0, -delta.trace(), 0, 0, BigRational(1)});
    auto target = quad_ball(delta, prec);
    std::vector<ComplexBall> out;
    for (const auto& z : numeric_roots(sextic, static_cast<int>(prec)))
        if (overlaps(z * z * z, target)) out.push_back(z);
    return out;
}

/// Roots of the encoded cubic against u + 1/u over the cube roots u of delta.
inline bool kappa_roots_match(const CoclassC3& cc) {
    const mpfr_prec_t prec = 160;
    auto roots = numeric_roots(c3_encode(cc).defining_poly(), static_cast<int>(prec));
    auto us = cube_roots(cc.delta, prec);
    if (us.size() != 3) return false;
    for (const auto& u : us) {
        ComplexBall v = u + inverse(u);
        if (std::none_of(roots.begin(), roots.end(), [&](const ComplexBall& r) { return overlaps(r, v); }))
            return false;
    }
    return true;
}

inline bool is_cube_in_twist(const QuadElem& delta, const std::vector<BigRational>& thetas) {
    for (const auto& t : thetas) {
        BigRational disc = t * t - 4;
        if (disc == 0) return delta == QuadElem::rational(delta.d, pow(t / 2, 3));
        auto m = rational_sqrt(disc / BigRational(delta.d));
        if (!m) continue;
        QuadElem u{delta.d, t / 2, *m / 2};
        if (u.pow(3) == delta || u.pow(3) == delta.conj()) return true;
    }
    return false;
}

}  // namespace oracle
