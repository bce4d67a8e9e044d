#include "doctest.h"

#include <random>
#include <set>

#include "galcoh/errors.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/localsym.hpp"
#include "oracles.hpp"

using namespace galcoh;

namespace {

/// |(Z/p^k)^x / m-th powers| by listing the powers.
long brute_unit_classes(long p, int k, int m) {
    long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    std::set<long> units, powers;
    for (long x = 1; x < n; ++x) {
        if (x % p == 0) continue;
        units.insert(x);
        long y = 1;
        for (int i = 0; i < m; ++i) y = y * x % n;
        powers.insert(y);
    }
    return static_cast<long>(units.size() / powers.size());
}

/// f has a simple root mod p, hence a root in Q_p (p good for f).
bool has_simple_root_mod(const RationalPoly& f, long p) {
    auto z = f.primitive_integer();
    auto fp = modp::make_monic(modp::reduce(z, static_cast<std::uint64_t>(p)), static_cast<std::uint64_t>(p));
    auto degs = modp::factor_degrees(fp, static_cast<std::uint64_t>(p));
    return std::find(degs.begin(), degs.end(), 1) != degs.end();
}

bool good_prime(const RationalPoly& f, long p) {
    auto z = f.primitive_integer();
    BigInt disc = BigRational(discriminant(RationalPoly::from_integers(z))).get_num();
    return disc % BigInt(p) != 0 && z.back() % BigInt(p) != 0;
}

/// x == y to working precision (60 digits, less a few lost to pi^2 = p).
bool close(const PadicW& w, const WElem& x, const WElem& y) {
    WElem d = w.sub(x, y);
    return w.is_zero(d) || w.valuation(d) >= 2 * 55;
}

}  // namespace

TEST_CASE("class groups against brute force") {
    for (long p : {3L, 5L, 7L, 13L}) {
        auto cls = square_classes(Place::prime(p));
        CHECK(static_cast<long>(cls.size()) == 2 * brute_unit_classes(p, 3, 2));
    }
    CHECK(static_cast<long>(square_classes(Place::prime(2)).size()) == 2 * brute_unit_classes(2, 5, 2));
    CHECK(square_classes(Place::real()).size() == 2);
    std::vector<BigRational> reps;
    for (const auto& c : square_classes(Place::prime(5))) reps.push_back(representative(c));
    CHECK(reps == std::vector<BigRational>{1, 2, 5, 10});
    CHECK(static_cast<long>(cube_classes(7).size()) == 3 * brute_unit_classes(7, 4, 3));
    CHECK(static_cast<long>(cube_classes(5).size()) == 3 * brute_unit_classes(5, 3, 3));
    CHECK(cube_classes(7).size() == 9);
    CHECK(cube_classes(13).size() == 9);
    CHECK(cube_classes(11).size() == 3);
    CHECK_THROWS_AS(cube_classes(3), Unsupported);
    for (long p : {2L, 3L, 5L, 7L}) {
        std::set<LocalClass> seen;
        for (const auto& c : square_classes(Place::prime(p))) {
            CHECK(local_class(representative(c), c.place, 2) == c);
            seen.insert(c);
        }
        CHECK(seen.size() == square_classes(Place::prime(p)).size());
    }
    for (const auto& c : cube_classes(13)) CHECK(local_class(representative(c), c.place, 3) == c);
    CHECK(local_class(BigRational(50), Place::prime(5), 2) == local_class(BigRational(2), Place::prime(5), 2));
    CHECK(local_class(BigRational(1, 8), Place::prime(2), 2) == local_class(BigRational(2), Place::prime(2), 2));
    CHECK(localize_c2(10, Place::prime(5)) == "5*2");
    CHECK_THROWS_AS(local_class(0, Place::prime(5), 2), InvalidInput);
    CHECK_THROWS_AS(Place::prime(9), InvalidInput);
}

TEST_CASE("Hilbert symbol examples") {
    CHECK(hilbert2(2, 5, Place::prime(5)).k == 1);
    CHECK(hilbert2(-1, -1, Place::real()).k == 1);
    CHECK(hilbert2(-1, -1, Place::prime(2)).k == 1);
    CHECK(hilbert2(1, 7, Place::prime(7)).k == 0);
    CHECK_FALSE(conic_has_point(2, 5, Place::prime(5)));
    CHECK_FALSE(conic_has_point(-1, -1, Place::prime(2)));
    CHECK_FALSE(conic_has_point(-1, -1, Place::real()));
    CHECK(conic_has_point(1, 1, Place::prime(3)));
    CHECK(conic_has_point(1, 1, Place::real()));
    CHECK(hilbert2(2, 5, Place::prime(5)).to_string() == "-1");
}

TEST_CASE("Hilbert symbol agrees with the conic oracle on every class pair") {
    std::vector<Place> places{Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7), Place::prime(13),
                              Place::real()};
    for (const auto& pl : places) {
        auto cls = square_classes(pl);
        for (const auto& a : cls)
            for (const auto& b : cls) {
                CAPTURE(pl.to_string());
                CAPTURE(a.to_string());
                CAPTURE(b.to_string());
                bool conic = conic_has_point(representative(a), representative(b), pl);
                CHECK((hilbert2(a, b).k == 0) == conic);
            }
    }
}

TEST_CASE("Hilbert symbol: bilinear, symmetric, <a,-a> = 1") {
    for (long p : {0L, 2L, 3L, 5L, 7L, 13L}) {
        Place pl{p};
        auto cls = square_classes(pl);
        for (const auto& a : cls) {
            BigRational ra = representative(a);
            CHECK(hilbert2(ra, -ra, pl).k == 0);
            for (const auto& b : cls) {
                BigRational rb = representative(b);
                CHECK(hilbert2(ra, rb, pl) == hilbert2(rb, ra, pl));
                for (const auto& c : cls) {
                    BigRational rc = representative(c);
                    CHECK(hilbert2(ra * rc, rb, pl) == hilbert2(ra, rb, pl) * hilbert2(rc, rb, pl));
                }
            }
        }
    }
}

TEST_CASE("product formula") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        BigRational a = oracle::random_rational(rng, 60, 30), b = oracle::random_rational(rng, 60, 30);
        std::set<long> primes{2};
        for (const BigRational* q : {&a, &b})
            for (const BigInt& n : {BigInt(q->get_num()), BigInt(q->get_den())})
                if (abs(n) > 1)
                    for (const auto& [pr, e] : factor_integer(abs(n))) {
                        (void)e;
                        primes.insert(pr.get_si());
                    }
        SymbolValue prod = hilbert2(a, b, Place::real());
        for (long p : primes) prod = prod * hilbert2(a, b, Place::prime(p));
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(prod.k == 0);
    }
}

TEST_CASE("p-adic layer") {
    PadicW w(7);
    auto s2 = w.sqrt_rational(2);
    CHECK(close(w, w.mul(s2, s2), w.from_rational(2)));
    auto s3 = w.sqrt_rational(3);  // 3 is a nonresidue mod 7
    CHECK(close(w, w.mul(s3, s3), w.from_rational(3)));
    CHECK_FALSE(w.in_qp(s3));
    auto s14 = w.sqrt_rational(BigRational(14, 9));
    CHECK(w.valuation(s14) == 1);
    CHECK(close(w, w.mul(s14, s14), w.from_rational(BigRational(14, 9))));
    CHECK(w.valuation(w.from_rational(BigRational(1, 49))) == -4);
    CHECK_THROWS_AS(PadicW(2), Unsupported);
}

TEST_CASE("tame symbols") {
    // m = 2 over Q_p matches the closed formula.
    for (long p : {3L, 5L, 7L, 13L}) {
        PadicW w(p);
        auto cls = square_classes(Place::prime(p));
        for (const auto& a : cls)
            for (const auto& b : cls) {
                BigRational ra = representative(a), rb = representative(b);
                CHECK(tame_symbol(w, LocalFieldDesc{p, 1, 1}, w.from_rational(ra), w.from_rational(rb), 2) ==
                      hilbert2(ra, rb, Place::prime(p)));
            }
    }
    // Unramified quadratic over Q_5: sqrt 2 is a nonsquare unit of F_25, 5 a uniformizer.
    PadicW w5(5);
    LocalFieldDesc f25{5, 1, 2};
    CHECK(tame_symbol(w5, f25, w5.sqrt_rational(2), w5.from_rational(5), 2).k == 1);
    CHECK(tame_symbol(w5, f25, w5.sqrt_rational(2), w5.from_rational(3), 2).k == 0);
    CHECK(tame_symbol(w5, f25, w5.from_rational(2), w5.from_rational(5), 2).k == 0);  // 2 is a square in F_25
    // Cubic symbol on Q_7.
    CHECK(hilbert3(7, 7, 7).k == 0);
    CHECK(hilbert3(3, 5, 7).k == 0);
    CHECK_THROWS_AS(hilbert3(2, 7, 5), Unsupported);
    CHECK_THROWS_AS(tame_symbol(w5, LocalFieldDesc{5, 1, 1}, w5.from_rational(2), w5.from_rational(5), 3), Unsupported);
}

TEST_CASE("Steinberg relation <a, 1-a> = 1") {
    std::mt19937_64 rng(42);
    for (long p : {5L, 7L, 13L}) {
        PadicW w(p);
        for (int i = 0; i < 40; ++i) {
            BigRational a = oracle::random_rational(rng, 30, 20);
            if (a == 1) continue;
            CHECK(hilbert2(a, 1 - a, Place::prime(p)).k == 0);
            if (p % 3 == 1) CHECK(hilbert3(a, 1 - a, p).k == 0);
        }
        // Inside quadratic extensions: a = x + y sqrt(d) with d a nonresidue or p times a unit.
        for (BigRational d : {BigRational(least_nonresidue(p)), BigRational(p), BigRational(p * least_nonresidue(p))}) {
            LocalClass c = local_class(d, Place::prime(p), 2);
            LocalFieldDesc f{p, c.val ? 2 : 1, c.val ? 1 : 2};
            WElem r = w.sqrt_rational(d);
            for (int i = 0; i < 20; ++i) {
                BigRational x = oracle::random_rational(rng, 20, 9), y = oracle::random_rational(rng, 20, 9);
                WElem a = w.add(w.from_rational(x), w.mul(y, r));
                WElem b = w.sub(w.from_rational(1), a);
                CHECK(tame_symbol(w, f, a, b, 2).k == 0);
                if ((f.q() - 1) % 3 == 0) CHECK(tame_symbol(w, f, a, b, 3).k == 0);
            }
        }
    }
}

TEST_CASE("cubic Hilbert symbol on Q_7 is a perfect alternating pairing") {
    auto reps = h1_mu3_local(7);
    REQUIRE(reps.size() == 9);
    for (const auto& a : reps) {
        CHECK(hilbert3(a, -a, 7).k == 0);
        bool nonzero = false;
        for (const auto& b : reps) {
            CHECK((hilbert3(a, b, 7).k + hilbert3(b, a, 7).k) % 3 == 0);
            for (const auto& c : reps)
                CHECK(hilbert3(a * c, b, 7) == hilbert3(a, b, 7) * hilbert3(c, b, 7));
            nonzero = nonzero || hilbert3(a, b, 7).k != 0;
        }
        CHECK(nonzero == (a != 1));
    }
    CHECK(h1_mu3_local(5).size() == 3);
    CHECK(h1_c2_local(Place::prime(5)).size() == 4);
}

TEST_CASE("extended Hilbert pairing") {
    PadicW w(5);
    std::vector<LocalFieldDesc> f(3, LocalFieldDesc{5, 1, 1});
    auto q = [&](long x) { return w.from_rational(x); };
    CHECK(hilbert_etale(w, f, {q(1), q(1), q(1)}, {q(1), q(1), q(1)}, 2).k == 0);
    CHECK(hilbert_etale(w, f, {q(2), q(1), q(1)}, {q(5), q(1), q(1)}, 2).k == 1);
    CHECK(hilbert_etale(w, f, {q(2), q(2), q(1)}, {q(5), q(5), q(1)}, 2).k == 0);
    CHECK_THROWS_AS(hilbert_etale(w, f, {q(2)}, {q(5)}, 2), InvalidInput);
}

TEST_CASE("local H1 for order-3 modules has the size |H0(M)| |H0(M')|") {
    for (long p : {5L, 7L, 11L, 13L}) {
        for (long dd : {1L, -3L, -1L, 2L, 5L, 7L, -7L, 13L, 10L}) {
            BigInt D(dd);
            auto split = [&](const BigInt& d) {
                auto c = local_class(BigRational(d), Place::prime(p), 2);
                return c.val == 0 && c.unit == 0;
            };
            const long expect = (split(D) ? 3 : 1) * (split(tate_dual_twist(D)) ? 3 : 1);
            CAPTURE(p);
            CAPTURE(dd);
            CHECK(static_cast<long>(h1_c3_local(p, D).size()) == expect);
        }
    }
}

TEST_CASE("order-3 Tate pairing: bilinear, nondegenerate, well defined") {
    std::mt19937_64 rng(43);
    for (long p : {5L, 7L, 11L, 13L}) {
        for (long dd : {1L, -3L, -1L, 2L, 5L, 7L, 10L}) {
            BigInt D(dd);
            auto left = h1_c3_local(p, D);
            auto right = h1_c3_local(p, tate_dual_twist(D));
            CAPTURE(p);
            CAPTURE(dd);
            REQUIRE(left.size() == right.size());
            for (const auto& s : left) {
                bool row = false;
                for (const auto& t : right) {
                    auto v = tate_pair_c3(p, D, s, t);
                    row = row || !v.is_one();
                    for (const auto& s2 : left)
                        CHECK(tate_pair_c3(p, D, s * s2, t) == v * tate_pair_c3(p, D, s2, t));
                }
                CHECK(row == (c3_local_label(p, D, s) != c3_local_label(p, D, QuadElem::rational(s.d, 1))));
            }
            for (const auto& t : right) {
                bool col = false;
                for (const auto& s : left) col = col || !tate_pair_c3(p, D, s, t).is_one();
                CHECK(col == (t != QuadElem::rational(t.d, 1)));
            }
            // Changing a representative by a cube of a norm-one element.
            for (int i = 0; i < 4; ++i) {
                auto beta = oracle::random_c3(D, rng).delta;
                const auto& s = left[static_cast<std::size_t>(i) % left.size()];
                const auto& t = right[static_cast<std::size_t>(i + 1) % right.size()];
                CHECK(tate_pair_c3(p, D, s * beta.pow(3), t) == tate_pair_c3(p, D, s, t));
                CHECK(c3_local_label(p, D, s * beta.pow(3)) == c3_local_label(p, D, s));
            }
        }
    }
    CHECK_THROWS_AS(tate_pair_c3(3, 1, QuadElem::rational(-3, 1), QuadElem::rational(1, 1)), Unsupported);
    CHECK(tate_pair_c3(7, 1, QuadElem::rational(-3, 1), QuadElem{BigInt(1), BigRational(5, 4), BigRational(3, 4)}).is_one());
}

TEST_CASE("p = 7 cube-class pairing matrix is 9 x 9 and perfect") {
    auto left = h1_c3_local(7, 1), right = h1_c3_local(7, -3);
    REQUIRE(left.size() == 9);
    REQUIRE(right.size() == 9);
    std::set<std::vector<int>> rows;
    for (const auto& s : left) {
        std::vector<int> row;
        for (const auto& t : right) row.push_back(tate_pair_c3(7, 1, s, t).k);
        rows.insert(row);
    }
    CHECK(rows.size() == 9);
}

TEST_CASE("V4 Tate pairing on split R") {
    std::mt19937_64 rng(44);
    auto r = split_cubic_r();
    auto datum = [&](BigRational a, BigRational b) {
        return CoclassV4{r, {RationalPoly::constant(a), RationalPoly::constant(b), RationalPoly::constant(1 / (a * b))}};
    };
    CHECK(tate_pair_v4(5, datum(2, BigRational(1, 2)), datum(5, BigRational(1, 5))).k == 0);
    CHECK(tate_pair_v4(5, datum(1, 1), datum(5, 2)).k == 0);
    for (long p : {3L, 5L, 7L}) {
        auto h = h1_v4_split_local(p);
        REQUIRE(h.size() == 16);
        std::set<std::string> labels;
        for (const auto& s : h) labels.insert(v4_local_label(p, s));
        CHECK(labels.size() == 16);
        for (const auto& s : h) {
            bool row = false;
            for (const auto& t : h) {
                auto v = tate_pair_v4(p, s, t);
                row = row || !v.is_one();
                CHECK(v == tate_pair_v4(p, t, s));
                for (const auto& s2 : h) CHECK(tate_pair_v4(p, v4_add(s, s2), t) == v * tate_pair_v4(p, s2, t));
            }
            bool trivial = true;
            for (const auto& c : s.delta) trivial = trivial && c.coeff(0) == 1;
            CHECK(row == !trivial);
            // sigma * beta^2 with N(beta) = 1 is the same class.
            BigRational b1 = oracle::random_rational(rng, 9, 9), b2 = oracle::random_rational(rng, 9, 9);
            CoclassV4 moved = v4_add(s, datum(b1 * b1, b2 * b2));
            CHECK(v4_local_label(p, moved) == v4_local_label(p, s));
            for (const auto& t : h) CHECK(tate_pair_v4(p, moved, t) == tate_pair_v4(p, s, t));
        }
    }
}

TEST_CASE("V4 pairing over nonsplit R") {
    std::mt19937_64 rng(45);
    // x^3 - 2 at p = 5 is Q_5 x (unramified quadratic); Q x Q[sqrt 2] and Q x Q[sqrt 5] at 5.
    for (auto rtext : {"-2,0,0,1", "0,1|-2,0,1", "0,1|-5,0,1", "-1,-4,0,1"}) {
        auto r = EtaleAlgebra::parse(rtext).factors();
        for (long p : {5L, 7L, 11L}) {
            PadicW w(p);
            std::vector<LocalFactor> lf;
            try {
                lf = local_factors(w, r);
            } catch (const Unsupported&) {
                continue;
            }
            int deg = 0;
            for (const auto& f : lf) deg += f.field.e * f.field.f;
            CHECK(deg == 3);
            std::vector<CoclassV4> data;
            for (int i = 0; i < 5; ++i) data.push_back(oracle::random_v4_over(r, rng));
            for (const auto& a : data)
                for (const auto& b : data) {
                    CHECK(tate_pair_v4(p, a, b) == tate_pair_v4(p, b, a));
                    for (const auto& c : data)
                        CHECK(tate_pair_v4(p, v4_add(a, c), b) == tate_pair_v4(p, a, b) * tate_pair_v4(p, c, b));
                }
        }
    }
    auto r = EtaleAlgebra::parse("-2,0,0,1").factors();
    CHECK_THROWS_AS(tate_pair_v4(7, oracle::random_v4_over(r, rng), oracle::random_v4_over(r, rng)), Unsupported);
}

TEST_CASE("localization matches the local factorization of the encoded algebra") {
    CoclassC3 ex{5, QuadElem{BigInt(-15), BigRational(1, 4), BigRational(1, 4)}};
    CHECK(localize_c3(ex, 7).rfind("field:", 0) == 0);  // (-15 | 7) = -1
    CHECK(localize_c3(CoclassC3{5, QuadElem::rational(-15, 1)}, 7) == "field:v0u0");
    std::mt19937_64 rng(46);
    int checked = 0;
    for (long dd : {5L, -1L, 2L, 7L, -3L, 1L}) {
        for (int i = 0; i < 6; ++i) {
            auto cc = oracle::random_c3(dd, rng);
            RationalPoly f = c3_encode(cc).defining_poly();
            for (long p : {5L, 7L, 11L, 13L, 19L}) {
                if (!good_prime(f, p)) continue;
                const bool trivial = localize_c3(cc, p).find("v0u0") != std::string::npos;
                CHECK(trivial == has_simple_root_mod(f, p));
                ++checked;
            }
        }
    }
    for (int i = 0; i < 15; ++i) {
        auto cc = oracle::random_v4(rng);
        RationalPoly f = v4_quartic(cc);
        for (long p : {5L, 7L, 11L, 13L}) {
            if (!good_prime(f, p)) continue;
            std::string label;
            try {
                label = localize_v4(cc, p);
            } catch (const Unsupported&) {
                continue;
            }
            bool trivial = true;
            for (std::size_t pos = 0; (pos = label.find('u', pos)) != std::string::npos; ++pos)
                trivial = trivial && label[pos + 1] == '0' && label[pos - 1] == '0';
            CHECK(trivial == has_simple_root_mod(f, p));
            ++checked;
        }
    }
    CHECK(checked > 60);
}
