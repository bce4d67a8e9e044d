#include "doctest.h"

#include <algorithm>

#include "galcoh/errors.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/numberfield.hpp"
#include "oracles.hpp"

using namespace galcoh;

namespace {

RationalPoly P(const char* s) { return RationalPoly::parse(s); }
EtaleAlgebra A(const char* s) { return EtaleAlgebra::parse(s); }
EtaleAlgebra from(const RationalPoly& f) { return EtaleAlgebra::from_poly(f); }

bool same_field(const RationalPoly& f, const RationalPoly& g) {
    return f.degree() == g.degree() && has_root_in_extension(f, g) && has_root_in_extension(g, f);
}

std::vector<RationalPoly> split_r() { return {P("0,1"), P("-1,1"), P("1,1")}; }

std::vector<RationalPoly> consts(std::initializer_list<BigRational> v) {
    std::vector<RationalPoly> out;
    for (const auto& q : v) out.push_back(RationalPoly::constant(q));
    return out;
}

}  // namespace

TEST_CASE("QuadElem arithmetic") {
    QuadElem a{BigInt(-15), BigRational(1, 4), BigRational(1, 4)};
    CHECK(a.norm() == 1);
    CHECK(a * a.inverse() == QuadElem::rational(-15, 1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) * a.pow(2) == QuadElem::rational(-15, 1));
    CHECK(QuadElem::parse(-15, "1/4,-1/4") == a.conj());
    CHECK(a.to_string() == "1/4,1/4");
    CHECK_THROWS_AS(a + QuadElem::rational(2, 1), InvalidInput);
    CHECK_THROWS_AS(QuadElem::rational(-1, 0).inverse(), InvalidInput);
}

TEST_CASE("twists") {
    CHECK(tate_dual_twist(1) == -3);
    CHECK(tate_dual_twist(-3) == 1);
    for (long d : oracle::test_square_classes()) CHECK(tate_dual_twist(tate_dual_twist(d)) == d);
    CHECK(mu_power_dual(0, 7) == 1);
    CHECK(mu_power_dual(1, 7) == 0);
    CHECK(mu_power_dual(3, 7) == 4);
    for (int k = 0; k < 6; ++k) CHECK(mu_power_dual(mu_power_dual(k, 7), 7) == k);
    CHECK_THROWS_AS(mu_power_dual(1, 8), InvalidInput);
}

TEST_CASE("radical algebras") {
    CHECK(kummer_radical(2, 1).factor_degrees() == std::vector<int>{1, 1});
    CHECK(kummer_radical(3, 2).factor_degrees() == std::vector<int>{3});
    CHECK(kummer_radical(4, 4) == A("-2,0,1|2,0,1"));
    CHECK_THROWS_AS(kummer_radical(3, 0), InvalidInput);
    CHECK_THROWS_AS(kummer_radical(5, 2), Unsupported);
}

TEST_CASE("C3 encode examples") {
    CoclassC3 zero{5, QuadElem::rational(-15, 1)};
    CHECK(c3_encode(zero) == A("0,1|-5,0,1"));
    CoclassC3 cc{5, QuadElem{BigInt(-15), BigRational(1, 4), BigRational(1, 4)}};
    CHECK(c3_encode(cc).factors().front() == P("-1/2,-3,0,1"));
    CHECK(quadratic_resolvent(c3_encode(cc)) == 5);
    CHECK(oracle::kappa_roots_match(cc));
    // D = -3: T' split, u = 2 <-> (5/4, 3/4).
    CoclassC3 kum{-3, QuadElem{BigInt(1), BigRational(5, 4), BigRational(3, 4)}};
    auto l = c3_encode(kum);
    CHECK(l.factors().front() == P("-5/2,-3,0,1"));
    CHECK(same_field(l.factors().front(), P("-2,0,0,1")));
    CHECK(oracle::kappa_roots_match(kum));
    CHECK_THROWS_AS(c3_encode(CoclassC3{5, QuadElem{BigInt(-15), 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(c3_encode(CoclassC3{5, QuadElem{BigInt(-5), 1, 0}}), InvalidInput);
}

TEST_CASE("C3 decode examples") {
    auto z = c3_decode(A("0,1|-5,0,1"));
    CHECK(z.datum.D == 5);
    CHECK(z.datum.delta.is_rational());
    CHECK_FALSE(z.sign_ambiguous);
    auto d = c3_decode(A("-1/2,-3,0,1"));
    CHECK(d.datum.D == 5);
    CHECK(d.datum.delta.x == BigRational(1, 4));
    CHECK(abs(d.datum.delta.y) == BigRational(1, 4));
    CHECK(d.sign_ambiguous);
    auto k = c3_decode(A("-2,0,0,1"));
    CHECK(k.datum.D == -3);
    CHECK(k.datum.delta == QuadElem{BigInt(1), BigRational(5, 4), BigRational(3, 4)});
}

TEST_CASE("C3 round trips") {
    std::mt19937_64 rng(31);
    for (long dd : oracle::test_square_classes()) {
        for (int i = 0; i < 5; ++i) {
            auto cc = oracle::random_c3(dd, rng);
            CAPTURE(cc.delta.to_string());
            auto l = c3_encode(cc);
            CHECK(quadratic_resolvent(l) == dd);
            auto back = c3_decode(l).datum;
            CHECK(back.D == dd);
            if (l.factor_degrees() == std::vector<int>{3}) {
                CHECK((back.delta == cc.delta || back.delta == cc.delta.conj()));
            } else {
                // Zero class: delta is the cube of u with u + 1/u a rational root.
                CHECK(back.delta.is_rational());
                CHECK(oracle::is_cube_in_twist(cc.delta, rational_roots(l.defining_poly())));
            }
            CHECK(oracle::kappa_roots_match(cc));
        }
    }
    for (int i = 0; i < 40; ++i) {
        auto f = oracle::random_squarefree(3, 7, rng);
        auto l = from(f);
        CAPTURE(f.to_string());
        CHECK(is_isomorphic(c3_encode(c3_decode(l).datum), l));
    }
}

TEST_CASE("C3 group law") {
    CoclassC3 cc{5, QuadElem{BigInt(-15), BigRational(1, 4), BigRational(1, 4)}};
    CoclassC3 zero{5, QuadElem::rational(-15, 1)};
    CHECK(c3_add(cc, zero).delta == cc.delta);
    CHECK(c3_add(cc, CoclassC3{5, cc.delta.conj()}).delta.is_rational());
    // delta^2 has trace (1/2)^2 - 2 = -7/4.
    auto twice = c3_add(cc, cc);
    CHECK(twice.delta.trace() == BigRational(-7, 4));
    CHECK(c3_encode(twice).factors().front() == P("7/4,-3,0,1"));
    CHECK_THROWS_AS(c3_add(cc, CoclassC3{-3, QuadElem::rational(1, 1)}), InvalidInput);

    std::mt19937_64 rng(32);
    for (long dd : {5L, -1L, 2L, -3L, 7L}) {
        auto a = oracle::random_c3(dd, rng), b = oracle::random_c3(dd, rng);
        CHECK(is_isomorphic(c3_encode(c3_add(a, b)), c3_encode(c3_add(b, a))));
    }
}

TEST_CASE("V4 encode examples") {
    CoclassV4 triv{split_r(), consts({1, 1, 1})};
    CHECK(v4_encode(triv).factor_degrees() == std::vector<int>{1, 1, 1, 1});
    CoclassV4 cc{split_r(), consts({2, 3, BigRational(1, 6)})};
    RationalPoly f = v4_quartic(cc);
    CHECK(f == RationalPoly({BigRational(-23, 36), BigRational(-8), BigRational(-31, 3), BigRational(0), BigRational(1)}));
    CHECK(same_field(f, P("1,0,-10,0,1")));
    // Roots are the even-sign sums of sqrt 2, sqrt 3, sqrt(1/6).
    auto roots = numeric_roots(f, 128);
    auto s2 = numeric_roots(P("-2,0,1"), 128).back(), s3 = numeric_roots(P("-3,0,1"), 128).back();
    auto s6 = numeric_roots(P("-1/6,0,1"), 128).back();
    const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}};
    for (const auto& sg : signs) {
        auto sgn = [&](int e, const ComplexBall& z) { return e > 0 ? z : ComplexBall::exact(0, 0, 128) - z; };
        ComplexBall v = sgn(sg[0], s2) + sgn(sg[1], s3) + sgn(sg[2], s6);
        CHECK(std::any_of(roots.begin(), roots.end(), [&](const ComplexBall& r) { return overlaps(r, v); }));
    }
    CHECK_THROWS_AS(v4_encode(CoclassV4{split_r(), consts({2, 3, 1})}), InvalidInput);
    // R = Q x Q[sqrt 17] type: one rational resolvent root.
    CoclassV4 mixed{{P("0,1"), P("-17,0,1")}, {RationalPoly::constant(1), P("4,1")}};
    REQUIRE(r_symmetric(mixed.R, mixed.delta)[2] == -1);
    mixed.delta[0] = RationalPoly::constant(-1);
    auto g = v4_encode(mixed);
    CHECK(cubic_resolvent(g).factor_degrees() == std::vector<int>{1, 2});
}

TEST_CASE("V4 decode examples") {
    auto d = v4_decode(from(v4_quartic(CoclassV4{split_r(), consts({2, 3, BigRational(1, 6)})})));
    REQUIRE(d.R.size() == 3);
    std::vector<BigInt> classes;
    for (const auto& c : d.delta) classes.push_back(square_class(c.coeff(0)));
    std::sort(classes.begin(), classes.end());
    CHECK(classes == std::vector<BigInt>{2, 3, 6});
    auto t = v4_decode(A("0,1|-1,1|-2,1|-3,1"));
    for (const auto& c : t.delta) CHECK(is_square(c.coeff(0)));
    auto s4 = from(P("1,1,0,0,1"));
    auto r = v4_decode(s4);
    CHECK(r.R == std::vector<RationalPoly>{P("-1,-4,0,1")});
    CHECK(is_isomorphic(v4_encode(r), s4));
}

TEST_CASE("V4 round trips") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 25; ++i) {
        auto cc = oracle::random_v4(rng);
        auto l = v4_encode(cc);
        CHECK(is_isomorphic(cubic_resolvent(l), cc.r_algebra()));
        CHECK(quadratic_resolvent(l) == quadratic_resolvent(cc.r_algebra()));
        auto back = v4_decode(l);
        CHECK(is_isomorphic(back.r_algebra(), cc.r_algebra()));
        CHECK(is_isomorphic(v4_encode(back), l));
        CoclassV4 one{cc.R, {}};
        for (const auto& g : cc.R) one.delta.push_back(RationalPoly::constant(1));
        CHECK(h0_count(v4_encode(one)) > 0);
        CHECK(is_isomorphic(v4_encode(v4_add(cc, one)), l));
    }
    for (int i = 0; i < 25; ++i) {
        auto f = oracle::random_squarefree(4, 6, rng);
        CAPTURE(f.to_string());
        CHECK(is_isomorphic(v4_encode(v4_decode(from(f))), from(f)));
    }
}

TEST_CASE("C4 encode examples") {
    auto cc = CoclassC4::make(14, BigRational(-5, 4), BigRational(1, 2), BigRational(3, 2));
    CHECK(c4_quartic(cc) == P("7,0,-6,0,1"));
    CHECK(c4_encode(cc) == A("7,0,-6,0,1"));
    for (long d : {2L, 3L, 5L, 14L}) {
        auto l = c4_encode(CoclassC4::mirror(d));
        REQUIRE(l.factor_degrees() == std::vector<int>{2, 2});
        for (const auto& g : l.factors()) CHECK(square_class(discriminant(g)) == d);
        auto z = c4_encode(CoclassC4::trivial(d));
        REQUIRE(z.factor_degrees() == std::vector<int>{1, 1, 2});
        CHECK(square_class(discriminant(z.factors()[2])) == d);
    }
    CHECK_THROWS_AS(CoclassC4::make(14, 1, 1, 1), InvalidInput);
    CHECK_THROWS_AS(CoclassC4::make(4, 1, 0, 1), InvalidInput);
}

TEST_CASE("C4 decode examples") {
    auto d = c4_decode(A("7,0,-6,0,1"));
    CHECK(d.datum.D == 14);
    CHECK(d.datum.alpha.x == BigRational(-5, 4));
    CHECK(abs(d.datum.alpha.y) == BigRational(1, 2));
    CHECK(d.datum.c == BigRational(3, 2));
    CHECK(d.sign_ambiguous);
    for (long dd : {2L, 3L, 5L, 14L}) {
        auto split = c4_encode(CoclassC4::mirror(dd));
        auto m = c4_decode(split, BigInt(dd)).datum;
        CHECK(m.alpha == QuadElem::rational(-dd, -4));
        CHECK(m.c == 2);
        auto t = c4_decode(c4_encode(CoclassC4::trivial(dd))).datum;
        CHECK(t.D == dd);
        CHECK(t.alpha == QuadElem::rational(-dd, 1));
        CHECK(t.c == 1);
    }
    CHECK_THROWS_AS(c4_decode(A("1,1,0,0,1")), Unsupported);
    CHECK_THROWS_AS(c4_decode(A("0,1|-2,0,0,1")), Unsupported);
    CHECK_THROWS_AS(c4_decode(A("7,0,-6,0,1"), BigInt(3)), InvalidInput);
    // x^4 - 2 has P = 0; the decoded datum uses another even generator.
    auto k = c4_decode(A("-2,0,0,0,1"));
    CHECK(is_isomorphic(c4_encode(k.datum), A("-2,0,0,0,1")));
}

TEST_CASE("C4 round trips") {
    std::mt19937_64 rng(34);
    for (long dd : {2L, 3L, 5L, 14L, -1L, -2L, 7L, 10L, 17L, 6L}) {
        for (int i = 0; i < 5; ++i) {
            auto cc = oracle::random_c4(dd, rng);
            CAPTURE(cc.alpha.to_string());
            CAPTURE(to_string(cc.c));
            auto l = c4_encode(cc);
            auto back = c4_decode(l, BigInt(dd));
            CHECK(back.datum.D == dd);
            CHECK(is_isomorphic(c4_encode(back.datum), l));
            CoclassC4 flipped{cc.D, cc.alpha.conj(), cc.c};
            CHECK(c4_encode(c4_add(cc, flipped)).factor_degrees() == std::vector<int>{1, 1, 2});
            CHECK(is_isomorphic(c4_encode(c4_add(cc, CoclassC4::trivial(dd))), l));
            auto mirror = c4_encode(c4_add(cc, CoclassC4::mirror(dd)));
            CHECK(is_isomorphic(c4_encode(c4_add(c4_decode(mirror, BigInt(dd)).datum, CoclassC4::mirror(dd))), l));
            if (l.factor_degrees() == std::vector<int>{4}) CHECK(is_isomorphic(mirror_quartic(l), mirror));
        }
    }
    CHECK_THROWS_AS(c4_add(CoclassC4::trivial(2), CoclassC4::trivial(3)), InvalidInput);
}

TEST_CASE("C4 reduction") {
    auto cc = CoclassC4::make(14, BigRational(-5, 4), BigRational(1, 2), BigRational(3, 2));
    QuadElem beta{BigInt(-14), 1, 1};
    CoclassC4 moved{14, cc.alpha * beta.pow(4), cc.c * beta.norm()};
    auto red = c4_reduce(moved);
    CHECK(is_isomorphic(c4_encode(red), c4_encode(cc)));
    CoclassC4 scaled{14, cc.alpha * QuadElem::rational(-14, 81), cc.c * 9};
    CHECK(c4_reduce(scaled).c == cc.c);
}
