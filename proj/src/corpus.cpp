#include <algorithm>
#include <set>

#include "galcoh/cli.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/etalealg.hpp"
#include "galcoh/groupcoh.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/localsym.hpp"
#include "galcoh/permstruct.hpp"

namespace galcoh::cli {

using json = nlohmann::json;

const std::vector<std::string>& curated_galois_corpus() {
    static const std::vector<std::string> corpus{
        "1,1,1,1,1",     "1,0,-10,0,1", "1,1,0,0,1",   "7,0,-6,0,1",    "-2,0,0,1",
        "-1,-3,0,1",     "-2,0,1",      "8,0,-12,0,1", "1,0,0,0,1",     "-2,0,0,0,1",
        "2,0,4,0,1",     "5,0,5,0,1",   "1,-1,1,-1,1", "12,8,0,0,1",    "1,0,-4,0,1",
        "5,0,-5,0,1",    "1,-2,-1,1",   "-1,-1,0,1",   "-3,1,-1,1",     "3,0,1,0,1",
        "13,-12,6,-4,1", "3,0,0,0,1",   "1,0,1",       "-1,1,0,0,1",    "1,-3,0,1"};
    return corpus;
}

std::vector<std::string> corpus_suites() { return {"galois", "hilbert", "structures", "h1-bijection", "tate", "codecs"}; }

namespace {

json suite_galois() {
    json items = json::array();
    int passed = 0;
    for (const auto& text : curated_galois_corpus()) {
        RationalPoly f = RationalPoly::parse(text);
        auto l = EtaleAlgebra::from_poly(f);
        json it{{"f", text}, {"galois_tag", galois_group(l)}};
        if (f.degree() >= 2) it["disc_class"] = to_string(quadratic_resolvent(l));
        if (f.degree() == 4) it["resolvent_pattern"] = cubic_resolvent(f).factor_degrees();
        const bool irreducible = l.factors().size() == 1;
        it["irreducible"] = irreducible;
        passed += irreducible ? 1 : 0;
        items.push_back(it);
    }
    return json{{"items", items}, {"passed", passed}, {"total", items.size()}};
}

json suite_hilbert() {
    json items = json::array();
    int passed = 0, total = 0;
    for (Place pl : {Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7), Place::prime(13), Place::real()}) {
        auto cls = square_classes(pl);
        json reps = json::array(), m = json::array();
        int agree = 0;
        for (const auto& a : cls) {
            reps.push_back(to_string(representative(a)));
            json row = json::array();
            for (const auto& b : cls) {
                auto v = hilbert2(a, b);
                row.push_back(v.to_string());
                agree += (v.k == 0) == conic_has_point(representative(a), representative(b), pl) ? 1 : 0;
            }
            m.push_back(row);
        }
        const int cells = static_cast<int>(cls.size() * cls.size());
        items.push_back({{"place", pl.to_string()}, {"classes", reps}, {"matrix", m}, {"conic_agreement", agree}, {"cells", cells}});
        passed += agree;
        total += cells;
    }
    return json{{"items", items}, {"passed", passed}, {"total", total}};
}

json suite_structures() {
    json items = json::array();
    int passed = 0, total = 0;
    const PermGroup c4 = PermGroup::cyclic(4), s4 = PermGroup::symmetric(4);
    struct Case {
        const char* name;
        PermGroup image, g;
        int expected;
    };
    std::vector<Case> cases{{"zeta5 image in C4", c4, c4, 2}, {"trivial image in C4", PermGroup::trivial(4), c4, 6},
                            {"S4 in S4", s4, s4, 1}};
    for (const auto& c : cases) {
        const int n = count_g_structures(c.image, c.g).count;
        items.push_back({{"case", c.name}, {"count", n}, {"expected", c.expected}});
        passed += n == c.expected ? 1 : 0;
        ++total;
    }
    const std::vector<std::vector<int>> modules{{2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
    for (const auto& orders : modules) {
        FiniteAbelian m(orders);
        auto hol = holomorph(m);
        const std::size_t auts = m.automorphisms().size();
        long fact = 1;
        for (int i = 2; i <= m.size(); ++i) fact *= i;
        const bool sym = static_cast<long>(hol.group.order()) == fact;
        items.push_back({{"module", m.to_string()},
                         {"hol_order", hol.group.order()},
                         {"aut_order", auts},
                         {"equals_sym", sym}});
        passed += hol.group.order() == static_cast<std::size_t>(m.size()) * auts ? 1 : 0;
        ++total;
    }
    return json{{"items", items}, {"passed", passed}, {"total", total}};
}

json suite_h1_bijection() {
    json items = json::array();
    int passed = 0;
    for (const char* name : {"C2:C2:triv", "S3:C3:sign", "S3:C2xC2:perm", "C2:C4:inv"}) {
        auto gm = named_module(name);
        auto hol = h1_via_hol(gm);
        const std::size_t h = cohomology(gm, 1).size();
        items.push_back({{"module", name}, {"h1", h}, {"hol_classes", hol.class_reps.size()}, {"bijective", hol.bijective}});
        passed += hol.bijective && hol.class_reps.size() == h ? 1 : 0;
    }
    return json{{"items", items}, {"passed", passed}, {"total", items.size()}};
}

bool nondegenerate(const std::vector<std::vector<int>>& k) {
    int zero_rows = 0, zero_cols = 0;
    for (const auto& row : k) zero_rows += std::all_of(row.begin(), row.end(), [](int v) { return v == 0; }) ? 1 : 0;
    for (std::size_t j = 0; j < k.front().size(); ++j) {
        bool all = true;
        for (const auto& row : k) all = all && row[j] == 0;
        zero_cols += all ? 1 : 0;
    }
    return zero_rows == 1 && zero_cols == 1;
}

json suite_tate() {
    json items = json::array();
    int passed = 0;
    {
        auto left = h1_c3_local(7, 1), right = h1_c3_local(7, tate_dual_twist(1));
        std::vector<std::vector<int>> k;
        for (const auto& s : left) {
            k.emplace_back();
            for (const auto& t : right) k.back().push_back(tate_pair_c3(7, 1, s, t).k);
        }
        const bool ok = nondegenerate(k);
        items.push_back({{"module", "c3"}, {"p", 7}, {"D", "1"}, {"size", left.size()}, {"nondegenerate", ok}});
        passed += ok ? 1 : 0;
    }
    for (long p : {3L, 5L, 7L}) {
        auto h = h1_v4_split_local(p);
        std::vector<std::vector<int>> k;
        for (const auto& s : h) {
            k.emplace_back();
            for (const auto& t : h) k.back().push_back(tate_pair_v4(p, s, t).k);
        }
        const bool ok = nondegenerate(k);
        items.push_back({{"module", "v4"}, {"p", p}, {"size", h.size()}, {"nondegenerate", ok}});
        passed += ok ? 1 : 0;
    }
    return json{{"items", items}, {"passed", passed}, {"total", items.size()}};
}

json suite_codecs() {
    json items = json::array();
    int passed = 0;
    auto check = [&](const std::string& name, const EtaleAlgebra& got, const std::string& want) {
        const bool ok = is_isomorphic(got, EtaleAlgebra::parse(want));
        items.push_back({{"case", name}, {"algebra", got.to_string()}, {"expected", want}, {"isomorphic", ok}});
        passed += ok ? 1 : 0;
    };
    check("c4 encode D=14", c4_encode(CoclassC4::make(14, BigRational(-5, 4), BigRational(1, 2), BigRational(3, 2))),
          "7,0,-6,0,1");
    for (long d : {2L, 3L, 5L, 14L})
        check("c4 mirror datum D=" + std::to_string(d), c4_encode(CoclassC4::mirror(d)),
              "-" + std::to_string(d) + ",0,1|-" + std::to_string(d) + ",0,1");
    check("etale mirror", mirror_quartic(EtaleAlgebra::parse("7,0,-6,0,1")), "8,0,-12,0,1");
    check("c3 encode D=5", c3_encode(CoclassC3{5, QuadElem{-15, BigRational(1, 4), BigRational(1, 4)}}),
          "-1/2,-3,0,1");
    return json{{"items", items}, {"passed", passed}, {"total", items.size()}};
}

}  // namespace

json run_corpus(const std::string& suite, int precision_bits) {
    (void)precision_bits;
    json out;
    if (suite == "galois") out = suite_galois();
    else if (suite == "hilbert") out = suite_hilbert();
    else if (suite == "structures") out = suite_structures();
    else if (suite == "h1-bijection") out = suite_h1_bijection();
    else if (suite == "tate") out = suite_tate();
    else if (suite == "codecs") out = suite_codecs();
    else throw InvalidInput("unknown suite '" + suite + "'; known: galois hilbert structures h1-bijection tate codecs");
    out["suite"] = suite;
    return out;
}

}  // namespace galcoh::cli
