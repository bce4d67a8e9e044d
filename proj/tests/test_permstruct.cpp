#include "doctest.h"

#include <random>

#include "galcoh/errors.hpp"
#include "galcoh/permstruct.hpp"

using namespace galcoh;

namespace {

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

std::vector<FiniteAbelian> small_modules() {
    return {FiniteAbelian(std::vector<int>{}),      FiniteAbelian({2}),    FiniteAbelian({3}),
            FiniteAbelian({4}),       FiniteAbelian({2, 2}), FiniteAbelian({5}),
            FiniteAbelian({6}),       FiniteAbelian({7}),    FiniteAbelian({8}),
            FiniteAbelian({4, 2}),    FiniteAbelian({2, 2, 2})};
}

/// Brute count of automorphisms: bijections of the element set that respect addition.
std::size_t brute_aut_count(const FiniteAbelian& m) {
    std::size_t count = 0;
    for (const auto& p : all_perms(m.size())) {
        bool ok = true;
        for (int a = 0; a < m.size() && ok; ++a)
            for (int b = 0; b < m.size() && ok; ++b) ok = p(m.add(a, b)) == m.add(p(a), p(b));
        count += ok ? 1 : 0;
    }
    return count;
}

PermGroup S3() { return PermGroup::symmetric(3); }

}  // namespace

TEST_CASE("perm basics") {
    Perm a = Perm::parse("(0 1 2)", 4), b = Perm::parse("(0 1)", 4);
    CHECK((a * b)(0) == a(b(0)));
    CHECK(a.order() == 3);
    CHECK(a.to_string() == "(0 1 2)");
    CHECK(Perm::parse("(0,2)(1 3)", 4).to_string() == "(0 2)(1 3)");
    CHECK(Perm::identity(3).to_string() == "()");
    CHECK((a * a.inverse()).is_identity());
    CHECK_THROWS_AS(Perm::parse("(0 0)", 3), InvalidInput);
    CHECK_THROWS_AS(Perm::parse("(0 5)", 3), InvalidInput);
    CHECK(PermGroup::symmetric(4).order() == 24);
    CHECK_THROWS_AS(PermGroup::symmetric(9), Unsupported);
}

TEST_CASE("holomorph examples") {
    auto h3 = holomorph(FiniteAbelian({3}));
    CHECK(h3.group.order() == 6);
    CHECK(h3.group == PermGroup::symmetric(3));
    auto h22 = holomorph(FiniteAbelian({2, 2}));
    CHECK(h22.group.order() == 24);
    CHECK(h22.group == PermGroup::symmetric(4));
    CHECK(holomorph(FiniteAbelian({4})).group.order() == 8);
}

TEST_CASE("holomorph composition law and the four-case list") {
    for (const auto& m : small_modules()) {
        auto hol = holomorph(m);
        auto auts = m.automorphisms();
        CHECK(auts.size() == brute_aut_count(m));
        CHECK(hol.group.order() == static_cast<std::size_t>(m.size()) * auts.size());
        // lambda_{a,t} o lambda_{b,u} = lambda_{ab, a(u) + t}
        for (const auto& a : auts)
            for (const auto& b : auts)
                for (int t = 0; t < m.size(); ++t)
                    for (int u = 0; u < m.size(); u += 1 + m.size() / 3)
                        CHECK(hol.lambda(a, t) * hol.lambda(b, u) == hol.lambda(a * b, m.add(a(u), t)));
        // Translations form a normal subgroup; automorphisms fix 0.
        for (const auto& g : hol.group.elements())
            for (const auto& tr : hol.translation_generators) {
                Perm c = g * tr * g.inverse();
                CHECK(c(0) == m.add(c(0), 0));
                CHECK(c == hol.translation(c(0)));
            }
        for (const auto& a : hol.automorphism_generators) CHECK(a(0) == 0);
        bool full = hol.group.order() == factorial(m.size());
        bool listed = m.size() <= 3 || m.orders() == std::vector<int>{2, 2};
        CHECK_MESSAGE(full == listed, m.to_string());
    }
}

TEST_CASE("cayley images") {
    auto c2 = cayley_images(PermGroup::cyclic(2));
    CHECK(c2.left.order() == 2);
    CHECK(c2.left == c2.right);
    auto c4 = cayley_images(PermGroup::cyclic(4));
    CHECK(c4.left == c4.right);
    CHECK(c4.left.order() == 4);
    auto s3 = cayley_images(S3());
    CHECK(s3.left.order() == 6);
    CHECK(s3.right.order() == 6);
    CHECK_FALSE(s3.left == s3.right);
    for (const auto& a : s3.left.elements())
        for (const auto& b : s3.right.elements()) CHECK(a * b == b * a);
    // simply transitive
    for (const auto* grp : {&s3.left, &s3.right})
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) {
                int hits = 0;
                for (const auto& g : grp->elements()) hits += g(x) == y ? 1 : 0;
                CHECK(hits == 1);
            }
}

TEST_CASE("centralizer examples") {
    auto s3 = cayley_images(S3());
    CHECK(centralizer_in_sym(s3.left) == s3.right);
    auto c = centralizer_in_sym(PermGroup::parse("(1 3)(2 4)", 5).conjugate(Perm::identity(5)));
    // on the four points 1..4 plus a fixed point the centralizer has order 8 * 1
    CHECK(centralizer_in_sym(PermGroup::parse("(0 2)(1 3)", 4)).order() == 8);
    auto d = centralizer_in_sym(PermGroup::parse("(0 2)(1 3)", 4));
    CHECK_FALSE(d.is_abelian());
    CHECK(c.order() == 8);
    for (int n = 3; n <= 6; ++n) CHECK(centralizer_in_sym(PermGroup::symmetric(n)).order() == 1);
}

TEST_CASE("double centralizer of Cayley images") {
    std::vector<PermGroup> groups{PermGroup::trivial(1), PermGroup::cyclic(2), PermGroup::cyclic(3),
                                  PermGroup::cyclic(4),  PermGroup::parse("(0 1);(2 3)", 4),
                                  PermGroup::cyclic(5),  PermGroup::cyclic(6), S3()};
    for (const auto& g : groups) {
        auto cay = cayley_images(g);
        CHECK(centralizer_in_sym(centralizer_in_sym(cay.left)) == cay.left);
        CHECK(centralizer_in_sym(cay.left) == cay.right);
    }
}

TEST_CASE("G-structure counts") {
    PermGroup c4 = PermGroup::cyclic(4);
    CHECK(count_g_structures(c4, c4).count == 2);
    CHECK(count_g_structures(PermGroup::trivial(4), c4).count == 6);
    CHECK(count_g_structures(PermGroup::symmetric(4), PermGroup::symmetric(4)).count == 1);
    CHECK(count_g_structures(PermGroup::symmetric(4), c4).count == 0);
}

TEST_CASE("G-structure counts are conjugation invariant") {
    std::mt19937 rng(3);
    auto perms = all_perms(4);
    std::vector<std::pair<PermGroup, PermGroup>> cases{
        {PermGroup::cyclic(4), PermGroup::cyclic(4)},
        {PermGroup::trivial(4), PermGroup::parse("(0 1 2 3);(0 2)", 4)},
        {PermGroup::parse("(0 1)(2 3)", 4), PermGroup::parse("(0 1)(2 3);(0 2)(1 3)", 4)},
        {PermGroup::parse("(0 1 2)", 4), PermGroup::parse("(0 1 2);(0 1)(2 3)", 4)}};
    for (const auto& [img, g] : cases) {
        int base = count_g_structures(img, g).count;
        for (int k = 0; k < 5; ++k) {
            const Perm& pi = perms[rng() % perms.size()];
            CHECK(count_g_structures(img.conjugate(pi), g.conjugate(pi)).count == base);
        }
    }
}

TEST_CASE("resolvent images") {
    const PermGroup s4 = PermGroup::symmetric(4);
    auto sgn = Homomorphism::sign(4);
    CHECK(resolvent_image(PermGroup::symmetric(4), sgn).order() == 2);
    auto rho = Homomorphism::s4_to_s3();
    CHECK(resolvent_image(PermGroup::symmetric(4), rho).order() == 6);
    CHECK(resolvent_image(PermGroup::parse("(0 1)(2 3);(0 2)(1 3)", 4), rho).order() == 1);
    auto d4 = PermGroup::parse("(0 1 2 3);(0 2)", 4);
    CHECK(resolvent_image(d4, Homomorphism::identity(PermGroup::symmetric(4))) == d4);
    CHECK(resolvent_image(PermGroup::cyclic(4), rho).order() == 2);
    // functoriality: sign of S3 after s4->s3 equals the composed map
    auto composed = Homomorphism::sign(3).compose_after(rho);
    for (const auto& g : s4.elements())
        CHECK(composed.apply(g) == Homomorphism::sign(3).apply(rho.apply(g)));
    CHECK(resolvent_image(d4, composed) ==
          resolvent_image(resolvent_image(d4, rho), Homomorphism::sign(3)));
    // kernel of s4 -> s3 is exactly V4
    int kernel = 0;
    for (const auto& g : s4.elements()) kernel += rho.apply(g).is_identity();
    CHECK(kernel == 4);
    CHECK_THROWS_AS(Homomorphism(PermGroup::cyclic(4), {Perm::parse("(0 1 2)", 3)}), InvalidInput);
}

TEST_CASE("stable partitions") {
    CHECK(stable_partitions(PermGroup::trivial(4)).size() == 15);
    CHECK(stable_partitions(PermGroup::symmetric(4)).size() == 2);
    auto d4 = PermGroup::parse("(0 1 2 3);(0 2)", 4);
    int two_two = 0;
    for (const auto& sp : stable_partitions(d4)) {
        if (sp.block_sizes == std::vector<int>{2, 2}) {
            ++two_two;
            CHECK(sp.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
        }
        if (sp.block_sizes.front() == sp.block_sizes.back()) CHECK(sp.in_wreath);
    }
    CHECK(two_two == 1);
}

TEST_CASE("stable partitions exhaustive cross-check") {
    std::vector<PermGroup> groups{PermGroup::cyclic(5), PermGroup::cyclic(6), S3(),
                                  PermGroup::parse("(0 1)(2 3)(4 5)", 6),
                                  PermGroup::parse("(0 1 2)(3 4 5);(0 3)(1 4)(2 5)", 6),
                                  PermGroup::parse("(0 1)", 5)};
    for (const auto& h : groups) {
        auto got = stable_partitions(h);
        std::size_t expected = 0;
        for (const auto& blocks : all_set_partitions(h.degree())) {
            std::vector<int> label(static_cast<std::size_t>(h.degree()));
            for (std::size_t b = 0; b < blocks.size(); ++b)
                for (int x : blocks[b]) label[static_cast<std::size_t>(x)] = static_cast<int>(b);
            bool stable = true;
            for (const auto& g : h.elements())
                for (int x = 0; x < h.degree(); ++x)
                    for (int y = 0; y < h.degree(); ++y)
                        if (label[static_cast<std::size_t>(x)] == label[static_cast<std::size_t>(y)] &&
                            label[static_cast<std::size_t>(g(x))] != label[static_cast<std::size_t>(g(y))])
                            stable = false;
            if (stable) {
                ++expected;
                bool returned = false;
                for (const auto& sp : got) returned |= sp.blocks == blocks;
                CHECK(returned);
            }
        }
        CHECK(got.size() == expected);
    }
}

TEST_CASE("torsor structures") {
    auto c3 = PermGroup::cyclic(3);
    auto t = torsor_structures(cayley_images(c3).left, c3);
    CHECK(t.size() == 1);
    CHECK(torsor_structures(PermGroup::trivial(2), PermGroup::cyclic(2)).size() == 1);
    for (const auto& g : {c3, PermGroup::cyclic(4), S3(), PermGroup::parse("(0 1);(2 3)", 4)}) {
        auto cay = cayley_images(g);
        for (const auto& image : {cay.left, PermGroup::trivial(cay.left.degree())}) {
            int total = 0;
            for (const auto& ts : torsor_structures(image, g)) {
                total += ts.identifications;
                CHECK(ts.right_conjugate.order() == g.order());
                for (const auto& x : image.generators()) CHECK(ts.right_conjugate.contains(x));
            }
            CHECK(total == count_g_structures(image, cay.right).count);
        }
    }
}
